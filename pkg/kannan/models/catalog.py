"""
Space and map catalog
"""

# Флаги (complete, boundedly_compact, compact) взяты из статьи, а не вычислены.
# None означает "неизвестно".
SPACE_CATALOG = {
    "finite": {
        "name": "FiniteSpace", "complete": True, "boundedly_compact": True, "compact": True,
        "closed_subset_of_rn": None,
        "note": "every finite metric space is compact",
    },
    "gornicki_nat": {
        "name": "GornickiNat", "complete": True, "boundedly_compact": False, "compact": False,
        "closed_subset_of_rn": False,
        "note": "d(x,y) = 1+|1/x-1/y|; every Cauchy sequence is eventually constant",
    },
    "half_line": {
        "name": "HalfLineUsual", "complete": True, "boundedly_compact": True, "compact": False,
        "closed_subset_of_rn": True,
        "note": "[0,inf), usual metric; T1-orbitally compact, not T2-orbitally compact",
    },
    "unit_interval_right": {
        "name": "UnitIntervalRight", "complete": False, "boundedly_compact": False, "compact": False,
        "closed_subset_of_rn": False,
        "note": "[0,1), usual metric; orbitally compact for x/2 but not complete",
    },
    "split_set": {
        "name": "SplitSet", "complete": False, "boundedly_compact": False, "compact": False,
        "closed_subset_of_rn": False,
        "note": "(1,2] u {-1,0}, usual metric; orbitally compact for PiecewiseDrop",
    },
    "reciprocal": {
        "name": "ReciprocalSet", "complete": False, "boundedly_compact": False, "compact": False,
        "closed_subset_of_rn": False,
        "note": "{1/n}, usual metric; (1/n) is Cauchy without a limit in the set",
    },
}

MAP_CATALOG = {
    "table": {"name": "TableMap", "rule": "explicit assignment on a finite space"},
    "scale": {"name": "Scale", "rule": "x -> c*x"},
    "stair_scale": {"name": "StairScale", "rule": "x -> x/(n+1) for n-1 <= x < n"},
    "piecewise_drop": {"name": "PiecewiseDrop", "rule": "2 -> -1, otherwise -> 0"},
    "triple_nat": {"name": "TripleNat", "rule": "x -> 3x"},
    "custom": {"name": "Custom", "rule": "host-supplied rule"},
}


def get_space_info(kind: str) -> dict:
    """Получить описание пространства по виду"""
    return SPACE_CATALOG.get(kind, {"name": "Unknown", "complete": None, "boundedly_compact": None,
                                    "compact": None, "closed_subset_of_rn": None, "note": ""})


def get_space_name(kind: str) -> str:
    return get_space_info(kind)["name"]


def get_map_name(kind: str) -> str:
    return MAP_CATALOG.get(kind, {"name": "Unknown"})["name"]
