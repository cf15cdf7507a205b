from ._cordalg import (
    Crossing,
    KnotDiagram,
    Gf2Poly,
    CordRing,
    PassWord,
    LoopAction,
    Monodromy,
    Target,
    CordalgError,
    reduce,
    reduce_nf,
    lift,
    verify_hom,
    search_homs,
    evaluate_word,
    pullback_assignment,
    certify_action,
    nc,
)

__all__ = [
    "Crossing",
    "KnotDiagram",
    "Gf2Poly",
    "CordRing",
    "PassWord",
    "LoopAction",
    "Monodromy",
    "Target",
    "CordalgError",
    "reduce",
    "reduce_nf",
    "lift",
    "verify_hom",
    "search_homs",
    "evaluate_word",
    "pullback_assignment",
    "certify_action",
    "nc",
]
