"""Liquidity-bucket and liquidity-tier classification of securities.

The taxonomy is data, not code: an ordered list of match rules that callers
can replace or extend. The shipped default stops at the second classification
level (asset class / sub-class), which is granular enough to pick a cost
model; finer region or currency splits are left to user-supplied rules.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..costmodel import SecurityLiquidityProfile


@dataclass(frozen=True)
class LiquidityBucketId:
    path: tuple[str, ...]

    def __str__(self) -> str:
        return "/".join(self.path)


UNCLASSIFIED = LiquidityBucketId(("Unclassified",))

# Tier scale: 1 converts to cash most easily, 5 hardly at all. Unmatched
# records keep the Unclassified bucket and the most conservative tier.
MIN_TIER, MAX_TIER = 1, 5


@dataclass(frozen=True)
class SecurityRecord:
    """A liquidity profile plus the descriptive fields classification needs."""

    profile: SecurityLiquidityProfile
    asset_class: str = ""
    cap_bucket: str = ""
    region: str = ""
    rating: str = ""
    duration: float | None = None
    credit_spread: float | None = None
    missing_fields: tuple[str, ...] = ()

    @property
    def security_id(self) -> str:
        return self.profile.security_id


_RATING_PREFIXES = (
    # longest prefixes first so BBB is not caught by BB, BAA not by BA
    ("AAA", "IG"), ("BAA", "IG"), ("BBB", "IG"), ("AA", "IG"),
    ("CAA", "HY"), ("CCC", "HY"), ("BB", "HY"), ("BA", "HY"), ("CA", "HY"),
    ("CC", "HY"), ("A", "IG"), ("B", "HY"), ("C", "HY"), ("D", "HY"),
)


def rating_class(rating: str) -> str:
    """Group a credit rating into IG / HY / NR.

    Understands the usual letter scales from both main agencies; anything
    unrecognized (or empty) is NR.
    """
    r = rating.strip().upper().replace(" ", "")
    if not r:
        return "NR"
    for prefix, group in _RATING_PREFIXES:
        if r.startswith(prefix):
            return group
    return "NR"


@dataclass(frozen=True)
class TaxonomyRule:
    """First-match-wins rule: attribute equalities to a bucket, tier and params key."""

    match: dict[str, str]
    bucket: tuple[str, ...]
    tier: int
    params_key: str = ""

    def matches(self, attrs: dict[str, str]) -> bool:
        return all(attrs.get(k, "").lower() == v.lower() for k, v in self.match.items())


def default_taxonomy() -> list[TaxonomyRule]:
    """Editable default rules covering the priced asset classes."""
    return [
        TaxonomyRule(
            {"asset_class": "equity", "cap_bucket": "large"},
            ("Equity", "LargeCap"), 1, "large_cap_equity",
        ),
        TaxonomyRule(
            {"asset_class": "equity", "cap_bucket": "small"},
            ("Equity", "SmallCap"), 2, "small_cap_equity",
        ),
        TaxonomyRule(
            {"asset_class": "equity", "cap_bucket": "private"},
            ("Equity", "Private"), 5, "",
        ),
        TaxonomyRule(
            {"asset_class": "sovereign_bond", "rating_class": "HY"},
            ("FixedIncome", "Sovereign"), 3, "sovereign_bond",
        ),
        TaxonomyRule(
            {"asset_class": "sovereign_bond", "region": "em"},
            ("FixedIncome", "Sovereign"), 2, "sovereign_bond",
        ),
        TaxonomyRule(
            {"asset_class": "sovereign_bond"},
            ("FixedIncome", "Sovereign"), 1, "sovereign_bond",
        ),
        TaxonomyRule(
            {"asset_class": "municipal_bond"},
            ("FixedIncome", "Municipal"), 2, "sovereign_bond",
        ),
        TaxonomyRule(
            {"asset_class": "inflation_linked"},
            ("FixedIncome", "InflationLinked"), 1, "sovereign_bond",
        ),
        TaxonomyRule(
            {"asset_class": "corporate_bond", "rating_class": "IG"},
            ("FixedIncome", "CorporateIG"), 3, "corporate_bond",
        ),
        TaxonomyRule(
            {"asset_class": "corporate_bond", "rating_class": "HY"},
            ("FixedIncome", "CorporateHY"), 4, "corporate_bond",
        ),
        TaxonomyRule(
            {"asset_class": "currency"},
            ("Currency",), 1, "",
        ),
    ]


def classify(
    record: SecurityRecord, taxonomy: list[TaxonomyRule] | None = None
) -> tuple[LiquidityBucketId, int]:
    """Deterministic bucket and tier assignment, Unclassified when nothing matches.

    Unclassified records get the most conservative tier so they are never
    accidentally treated as liquid.
    """
    rules = default_taxonomy() if taxonomy is None else taxonomy
    attrs = {
        "asset_class": record.asset_class,
        "cap_bucket": record.cap_bucket,
        "region": record.region,
        "rating": record.rating,
        "rating_class": rating_class(record.rating),
    }
    for rule in rules:
        if rule.matches(attrs):
            return LiquidityBucketId(rule.bucket), rule.tier
    return UNCLASSIFIED, MAX_TIER


def params_key_for(
    record: SecurityRecord, taxonomy: list[TaxonomyRule] | None = None
) -> str:
    """Bucket-parameter key of the first matching rule, empty when none."""
    rules = default_taxonomy() if taxonomy is None else taxonomy
    attrs = {
        "asset_class": record.asset_class,
        "cap_bucket": record.cap_bucket,
        "region": record.region,
        "rating": record.rating,
        "rating_class": rating_class(record.rating),
    }
    for rule in rules:
        if rule.matches(attrs):
            return rule.params_key
    return ""
