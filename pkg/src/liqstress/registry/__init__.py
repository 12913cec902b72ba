"""Security classification, bucket configuration and portfolio ingestion."""

from .classify import (
    MAX_TIER,
    MIN_TIER,
    UNCLASSIFIED,
    LiquidityBucketId,
    SecurityRecord,
    TaxonomyRule,
    classify,
    default_taxonomy,
    params_key_for,
    rating_class,
)
from .config import ConfigError, builtin_buckets, load_bucket_config, save_bucket_config
from .portfolio import PortfolioFileError, load_portfolio

__all__ = [
    "MAX_TIER",
    "MIN_TIER",
    "UNCLASSIFIED",
    "LiquidityBucketId",
    "SecurityRecord",
    "TaxonomyRule",
    "classify",
    "default_taxonomy",
    "params_key_for",
    "rating_class",
    "ConfigError",
    "builtin_buckets",
    "load_bucket_config",
    "save_bucket_config",
    "PortfolioFileError",
    "load_portfolio",
]
