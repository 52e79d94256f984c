"""Linear codes over small finite fields via the Plotkin (u|u+v) sum:
constructions, minimum-distance engines, a construction-recipe DSL and
best-known-code table scans.
"""

from .galois import (
    Field,
    Poly,
    cyclotomic_coset,
    field_create,
    field_for_order,
    minimal_polynomial,
    poly_divmod,
    poly_from_string,
    poly_gcd,
    poly_to_string,
)
from .matrix import Mat, nullspace, rank, rref, systematic_form
from .codes import (
    DistanceInfo,
    LinearCode,
    bch_code,
    cyclic_code,
    dual,
    extend,
    from_generator,
    load_code,
    plotkin_sum,
    puncture,
    save_code,
    shorten,
    weight,
)
from .distance import (
    DistanceResult,
    low_weight_witness,
    min_distance_bz,
    min_distance_exhaustive,
    weight_distribution,
)
from .recipe import RecipeError, eval_recipe, format_recipe, load_recipe, parse_recipe
from .tables import LIMITS, BoundsTable, TableError, load_snapshot, save_snapshot
from .search import Finding, findings_to_tsv, plotkin_scan, shortened_findings, stats

__version__ = "0.1.0"

__all__ = [
    "Field", "Poly", "cyclotomic_coset", "field_create", "field_for_order",
    "minimal_polynomial", "poly_divmod", "poly_from_string", "poly_gcd",
    "poly_to_string",
    "Mat", "nullspace", "rank", "rref", "systematic_form",
    "DistanceInfo", "LinearCode", "bch_code", "cyclic_code", "dual",
    "extend", "from_generator", "load_code", "plotkin_sum", "puncture",
    "save_code", "shorten", "weight",
    "DistanceResult", "low_weight_witness", "min_distance_bz",
    "min_distance_exhaustive", "weight_distribution",
    "RecipeError", "eval_recipe", "format_recipe", "load_recipe", "parse_recipe",
    "LIMITS", "BoundsTable", "TableError", "load_snapshot", "save_snapshot",
    "Finding", "findings_to_tsv", "plotkin_scan", "shortened_findings", "stats",
]
