#!/usr/bin/env python3
"""Regenerate the regression corpus under fixtures/.

Every fixture document is written out literally in the table below; the
script performs no arithmetic on expected values.  After writing it replays
the whole directory through the fixture runner and exits nonzero unless
every fixture passes with byte-identical canonical output, so a mistyped
expectation cannot land silently.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

from teichkit import run_fixtures

ROOT = Path(__file__).resolve().parent.parent

# recurring operand JSON, quoted once
M_DIAG = "[[[0.5,0],[0,0]],[[0,0],[0.25,0]]]"
M_DIAG_ASC = "[[[0.25,0],[0,0]],[[0,0],[0.5,0]]]"
M_JORDAN = "[[[0.5,0],[1,0]],[[0,0],[0.5,0]]]"
M_SCALAR = "[[[0.5,0],[0,0]],[[0,0],[0.5,0]]]"
M_EXPANDING = "[[[1.5,0],[0,0]],[[0,0],[0.5,0]]]"
M_SINGULAR = "[[[1,0],[2,0]],[[2,0],[4,0]]]"
M_TRIANGULAR = "[[[0.5,0],[7,0]],[[0,0],[0.25,0]]]"
M_IDENTITY = "[[[1,0],[0,0]],[[0,0],[1,0]]]"
M_COMPLEX = "[[[1,2],[3,0]],[[0,1],[2,0]]]"
M_S = "[[[0,0],[-1,0]],[[1,0],[0,0]]]"

P_BASE_TWIN = '{"stratum":"base","params":[[0.25,0],[1,0]]}'
P_BASE_RES = '{"stratum":"base","params":[[0.125,0],[0.75,0]]}'
P_BASE_FREE = '{"stratum":"base","params":[[0.15,0],[0.8,0]]}'
P_CURVE = '{"stratum":"c","params":[[0.5,0]]}'
P_CURVE2 = '{"stratum":"cp","p":2,"params":[[0.5,0]]}'

SQRT2 = '{"p":0,"q":1,"d":2}'
SQRT2_PLUS1 = '{"p":1,"q":1,"d":2}'
SQRT2_SHIFT7 = '{"p":3,"q":7,"d":2}'
SQRT2_RECIP = '{"p":0,"q":-2,"d":2}'
SQRT5 = '{"p":0,"q":1,"d":5}'
GOLDEN = '{"p":1,"q":2,"d":5}'

G_IDENTITY = '{"a":[[[1,0],[0,0]],[[0,0],[1,0]]],"t":[0,0]}'
G_IDENTITY_T1 = '{"a":[[[1,0],[0,0]],[[0,0],[1,0]]],"t":[1,0]}'
G_ID_T3 = '{"a":[[[1,0],[0,0]],[[0,0],[1,0]]],"t":[3,0]}'
G_DIAG21_T1 = '{"a":[[[2,0],[0,0]],[[0,0],[1,0]]],"t":[1,0]}'
G_DIAG21_T4 = '{"a":[[[2,0],[0,0]],[[0,0],[1,0]]],"t":[4,0]}'
G_SWAP_T2 = '{"a":[[[0,0],[1,0]],[[1,0],[0,0]]],"t":[2,0]}'
G_SHEAR = '{"a":[[[1,0],[1,0]],[[0,0],[1,0]]],"t":[0,0]}'
G_SINGULAR = '{"a":[[[1,0],[2,0]],[[2,0],[4,0]]],"t":[0,0]}'
A_POINT = '{"a":[[[0.5,0],[0,0]],[[0,0],[0.25,0]]],"t":[0,1]}'
A_EXPANDING = '{"a":[[[1.5,0],[0,0]],[[0,0],[0.5,0]]],"t":[0,1]}'

_TRIVIAL_LAWS = [
    {"name": name, "passed": True, "checked": 50, "failures": 0, "counterexample": None}
    for name in (
        "action-composition",
        "action-identity",
        "z-action-source-invariance",
        "z-action-target-invariance",
        "action-closure",
    )
]

CORPUS: dict[str, dict] = {
    # ------------------------------------------------------------ alg
    "alg_det_complex": {
        "command": ["alg", "det", "--matrix", M_COMPLEX],
        "expected": {"det": [2, 1]},
    },
    "alg_eigen_diagonalizable": {
        "command": ["alg", "eigen", "--matrix", M_DIAG],
        "expected": {"eigenvalues": [[0.5, 0], [0.25, 0]], "diagonalizable": True},
    },
    "alg_eigen_jordan": {
        "command": ["alg", "eigen", "--matrix", M_JORDAN],
        "expected": {"eigenvalues": [[0.5, 0], [0.5, 0]], "diagonalizable": False},
    },
    "alg_idet_unimodular": {
        "command": ["alg", "idet", "--matrix", "[[2,1],[1,1]]"],
        "expected": {"det": 1},
    },
    "alg_iinv_swap": {
        "command": ["alg", "iinv", "--matrix", "[[0,1],[1,0]]"],
        "expected": {"inverse": [[0, 1], [1, 0]]},
    },
    "alg_iinv_error_nonunimodular": {
        "command": ["alg", "iinv", "--matrix", "[[2,0],[0,1]]"],
        "exit": 1,
        "expected_error": {
            "error": "not_unimodular",
            "message": "integer inverse requires det +-1, got 2",
        },
    },
    "alg_imul_t_times_s": {
        "command": ["alg", "imul", "--a", "[[1,1],[0,1]]", "--b", "[[0,-1],[1,0]]"],
        "expected": {"product": [[1, -1], [1, 0]]},
    },
    "alg_inv_diagonal": {
        "command": ["alg", "inv", "--matrix", "[[[2,0],[0,0]],[[0,0],[4,0]]]"],
        "expected": {"inverse": [[[0.5, 0], [0, 0]], [[0, 0], [0.25, 0]]]},
    },
    "alg_inv_error_singular": {
        "command": ["alg", "inv", "--matrix", M_SINGULAR],
        "exit": 1,
        "expected_error": {
            "error": "singular_matrix",
            "message": "matrix is singular within tolerance, det=0j",
        },
    },
    "alg_itrace": {
        "command": ["alg", "itrace", "--matrix", "[[3,1],[0,4]]"],
        "expected": {"trace": 7},
    },
    "alg_mul_s_squared": {
        "command": ["alg", "mul", "--a", M_S, "--b", M_S],
        "expected": {"product": [[[-1, 0], [0, 0]], [[0, 0], [-1, 0]]]},
    },
    "alg_quadratic_roots_complex_pair": {
        "command": ["alg", "quadratic-roots", "--d", "0.25", "0", "--t", "0", "0"],
        "expected": {"roots": [[0, 0.5], [0, -0.5]]},
    },
    "alg_quadratic_roots_distinct": {
        "command": ["alg", "quadratic-roots", "--d", "0.125", "0", "--t", "0.75", "0"],
        "expected": {"roots": [[0.5, 0], [0.25, 0]]},
    },
    "alg_quadratic_roots_double": {
        "command": ["alg", "quadratic-roots", "--d", "0.25", "0", "--t", "1", "0"],
        "expected": {"roots": [[0.5, 0], [0.5, 0]]},
    },
    "alg_trace_complex": {
        "command": ["alg", "trace", "--matrix", M_COMPLEX],
        "expected": {"trace": [3, 2]},
    },
    # ------------------------------------------------------------ tori
    "tori_compose_exact": {
        "command": [
            "tori", "compose", "--tau", "0", "1",
            "--z1", "0.25", "0.25", "--z2", "0.5", "0.25",
        ],
        "expected": {"x": 0.75, "y": 0.5, "z": [0.75, 0.5]},
    },
    "tori_compose_wrap": {
        "command": [
            "tori", "compose", "--tau", "0", "1",
            "--z1", "0.25", "0.5", "--z2", "0.75", "0.5",
        ],
        "expected": {"x": 0, "y": 0, "z": [0, 0]},
    },
    "tori_equiv_false": {
        "command": ["tori", "equiv", "--tau1", "0", "1", "--tau2", "0", "2"],
        "expected": {"equivalent": False, "witness": None},
    },
    "tori_equiv_translate": {
        "command": ["tori", "equiv", "--tau1", "0", "2", "--tau2", "1", "2"],
        "expected": {"equivalent": True, "witness": [[1, 1], [0, 1]]},
    },
    "tori_lattice_reduce_negative": {
        "command": ["tori", "lattice-reduce", "--z", "-0.25", "0", "--tau", "0", "1"],
        "expected": {"x": 0.75, "y": 0},
    },
    "tori_lattice_reduce_square": {
        "command": ["tori", "lattice-reduce", "--z", "1.25", "0.5", "--tau", "0", "1"],
        "expected": {"x": 0.25, "y": 0.5},
    },
    "tori_moebius_identity": {
        "command": ["tori", "moebius", "--matrix", "[[1,0],[0,1]]", "--tau", "0.25", "2"],
        "expected": {"tau": [0.25, 2]},
    },
    "tori_moebius_inversion_at_i": {
        "command": ["tori", "moebius", "--matrix", "[[0,-1],[1,0]]", "--tau", "0", "1"],
        "expected": {"tau": [0, 1]},
    },
    "tori_moebius_translation": {
        "command": ["tori", "moebius", "--matrix", "[[1,1],[0,1]]", "--tau", "0.25", "2"],
        "expected": {"tau": [1.25, 2]},
    },
    "tori_moebius_error_det": {
        "command": ["tori", "moebius", "--matrix", "[[2,0],[0,1]]", "--tau", "0", "1"],
        "exit": 1,
        "expected_error": {
            "error": "not_unimodular",
            "message": "moebius action requires det 1, got 2",
        },
    },
    "tori_moebius_error_lower_half": {
        "command": ["tori", "moebius", "--matrix", "[[1,0],[0,1]]", "--tau", "1", "-1"],
        "exit": 1,
        "expected_error": {
            "error": "invalid_input",
            "message": "tau must lie in the upper half-plane, got (1-1j)",
        },
    },
    "tori_reduce_edge": {
        "command": ["tori", "reduce", "--tau", "0.5", "2"],
        "expected": {"reduced": [-0.5, 2], "witness": [[1, -1], [0, 1]]},
    },
    "tori_reduce_identity": {
        "command": ["tori", "reduce", "--tau", "0", "1"],
        "expected": {"reduced": [0, 1], "witness": [[1, 0], [0, 1]]},
    },
    "tori_reduce_invert": {
        "command": ["tori", "reduce", "--tau", "0.1", "0.1"],
        "expected": {"reduced": [0, 5], "witness": [[5, -1], [1, 0]]},
    },
    "tori_reduce_translate": {
        "command": ["tori", "reduce", "--tau", 5, 1],
        "expected": {"reduced": [0, 1], "witness": [[1, -5], [0, 1]]},
    },
    # ------------------------------------------------------------ hopf
    "hopf_biholo_coefficient_free": {
        "command": [
            "hopf", "biholo",
            "--a", '{"lambda":[0.5,0],"p":2,"c":[0.3,0]}',
            "--b", '{"lambda":[0.5,0],"p":2,"c":[7,0]}',
        ],
        "expected": {"biholomorphic": True},
    },
    "hopf_biholo_false_jordan_scalar": {
        "command": ["hopf", "biholo", "--a", M_SCALAR, "--b", '{"lambda":[0.5,0],"p":1}'],
        "expected": {"biholomorphic": False},
    },
    "hopf_biholo_true_triangular": {
        "command": ["hopf", "biholo", "--a", M_TRIANGULAR, "--b", M_DIAG],
        "expected": {"biholomorphic": True},
    },
    "hopf_classify_diagonal": {
        "command": ["hopf", "classify", "--matrix", M_DIAG_ASC],
        "expected": {
            "class": "diagonal",
            "lambda1": [0.5, 0],
            "lambda2": [0.25, 0],
            "det_trace": [[0.125, 0], [0.75, 0]],
        },
    },
    "hopf_classify_error_expanding": {
        "command": ["hopf", "classify", "--matrix", M_EXPANDING],
        "exit": 1,
        "expected_error": {
            "error": "not_contracting",
            "message": "matrix eigenvalue moduli must lie in (0, 1)",
        },
    },
    "hopf_classify_jordan": {
        "command": ["hopf", "classify", "--matrix", M_JORDAN],
        "expected": {
            "class": "resonant",
            "lambda": [0.5, 0],
            "p": 1,
            "det_trace": [[0.25, 0], [1, 0]],
        },
    },
    "hopf_classify_resonant_flag": {
        "command": ["hopf", "classify", "--resonant", "0.5", "0", "2"],
        "expected": {
            "class": "resonant",
            "lambda": [0.5, 0],
            "p": 2,
            "det_trace": [[0.125, 0], [0.75, 0]],
        },
    },
    "hopf_classify_resonant_zero_c": {
        "command": ["hopf", "classify", "--resonant", "0.5", "0", "2", "0", "0"],
        "expected": {
            "class": "diagonal",
            "lambda1": [0.5, 0],
            "lambda2": [0.25, 0],
            "det_trace": [[0.125, 0], [0.75, 0]],
        },
    },
    "hopf_contracting_false": {
        "command": ["hopf", "contracting", "--matrix", M_EXPANDING],
        "expected": {"contracting": False},
    },
    "hopf_contracting_true": {
        "command": ["hopf", "contracting", "--matrix", M_DIAG],
        "expected": {"contracting": True},
    },
    "hopf_det_trace": {
        "command": ["hopf", "det-trace", "--matrix", M_TRIANGULAR],
        "expected": {"det": [0.125, 0], "trace": [0.75, 0]},
    },
    "hopf_resonance_error_domain": {
        "command": ["hopf", "resonance", "--big", "1.5", "0", "--small", "0.5", "0"],
        "exit": 1,
        "expected_error": {
            "error": "invalid_input",
            "message": "lambda_big modulus must lie strictly inside (0, 1)",
        },
    },
    "hopf_resonance_none": {
        "command": ["hopf", "resonance", "--big", "0.5", "0", "--small", "0.3", "0"],
        "expected": {"p": None},
    },
    "hopf_resonance_one": {
        "command": ["hopf", "resonance", "--big", "0.5", "0", "--small", "0.5", "0"],
        "expected": {"p": 1},
    },
    "hopf_resonance_two": {
        "command": ["hopf", "resonance", "--big", "0.5", "0", "--small", "0.25", "0"],
        "expected": {"p": 2},
    },
    # ------------------------------------------------------------ teich
    "teich_adheres_base_to_twin": {
        "command": ["teich", "adheres", "--x", P_BASE_TWIN, "--y", P_CURVE],
        "expected": {"adheres": True},
    },
    "teich_adheres_curve_to_base": {
        "command": ["teich", "adheres", "--x", P_CURVE, "--y", P_BASE_TWIN],
        "expected": {"adheres": False},
    },
    "teich_adheres_self": {
        "command": ["teich", "adheres", "--x", P_BASE_FREE, "--y", P_BASE_FREE],
        "expected": {"adheres": True},
    },
    "teich_class_of_base": {
        "command": ["teich", "class", "--point", P_BASE_RES],
        "expected": {"class": "diagonal", "lambda1": [0.5, 0], "lambda2": [0.25, 0]},
    },
    "teich_class_of_curve": {
        "command": ["teich", "class", "--point", P_CURVE],
        "expected": {"class": "resonant", "lambda": [0.5, 0], "p": 1},
    },
    "teich_class_error_schema": {
        "command": ["teich", "class", "--point", '{"stratum":"cp","p":1,"params":[[0.5,0]]}'],
        "exit": 2,
    },
    "teich_contains_base_center": {
        "command": ["teich", "contains", "--center", P_BASE_TWIN, "--radius", "1e-9", "--x", P_CURVE],
        "expected": {"contains": True},
    },
    "teich_contains_curve_excludes_base": {
        "command": ["teich", "contains", "--center", P_CURVE, "--radius", "1", "--x", P_BASE_TWIN],
        "expected": {"contains": False},
    },
    "teich_image_base": {
        "command": ["teich", "image", "--point", P_BASE_FREE],
        "expected": {"d": [0.15, 0], "t": [0.8, 0]},
    },
    "teich_image_order_two": {
        "command": ["teich", "image", "--point", P_CURVE2],
        "expected": {"d": [0.125, 0], "t": [0.75, 0]},
    },
    "teich_in_domain_true": {
        "command": ["teich", "in-domain", "--d", "0.15", "0", "--t", "0.8", "0"],
        "expected": {"in_domain": True},
    },
    "teich_in_domain_false": {
        "command": ["teich", "in-domain", "--d", "1", "0", "--t", "2", "0"],
        "expected": {"in_domain": False},
    },
    "teich_in_domain_eps_flag": {
        "command": ["teich", "in-domain", "--d", "0.01", "0", "--t", "0.2", "0", "--eps", "0.2"],
        "expected": {"in_domain": False},
    },
    "teich_in_domain_eps_root": {
        "command": ["--eps", "0.2", "teich", "in-domain", "--d", "0.01", "0", "--t", "0.2", "0"],
        "expected": {"in_domain": False},
    },
    "teich_point_error_outside": {
        "command": ["teich", "image", "--point", '{"stratum":"base","params":[[1,0],[2,0]]}'],
        "exit": 1,
        "expected_error": {
            "error": "invalid_point",
            "message": "((1+0j), (2+0j)) is outside the base domain",
        },
    },
    "teich_point_of_diagonal": {
        "command": ["teich", "point", "--class", '{"class":"diagonal","lambda1":[0.5,0],"lambda2":[0.25,0]}'],
        "expected": {"point": {"stratum": "base", "params": [[0.125, 0], [0.75, 0]]}},
    },
    "teich_point_of_resonant": {
        "command": ["teich", "point", "--class", '{"class":"resonant","lambda":[0.5,0],"p":1}'],
        "expected": {"point": {"stratum": "c", "params": [[0.5, 0]]}},
    },
    "teich_point_of_resonant_order_two": {
        "command": ["teich", "point", "--class", '{"class":"resonant","lambda":[0.5,0],"p":2}'],
        "expected": {"point": {"stratum": "cp", "p": 2, "params": [[0.5, 0]]}},
    },
    "teich_separated_error_same_point": {
        "command": ["teich", "separated", "--x", P_BASE_FREE, "--y", P_BASE_FREE],
        "exit": 1,
        "expected_error": {
            "error": "same_point",
            "message": "separation is asked for two distinct points",
        },
    },
    "teich_separated_false_twins": {
        "command": ["teich", "separated", "--x", P_BASE_TWIN, "--y", P_CURVE],
        "expected": {"separated": False},
    },
    "teich_separated_true": {
        "command": ["teich", "separated", "--x", P_BASE_FREE, "--y", P_CURVE],
        "expected": {"separated": True},
    },
    "teich_twin_of_curve": {
        "command": ["teich", "twin", "--point", P_CURVE],
        "expected": {"twin": {"stratum": "base", "params": [[0.25, 0], [1, 0]]}},
    },
    "teich_twin_of_double_root": {
        "command": ["teich", "twin", "--point", P_BASE_TWIN],
        "expected": {"twin": {"stratum": "c", "params": [[0.5, 0]]}},
    },
    "teich_twin_of_resonant_base": {
        "command": ["teich", "twin", "--point", P_BASE_RES],
        "expected": {"twin": {"stratum": "cp", "p": 2, "params": [[0.5, 0]]}},
    },
    "teich_twin_none": {
        "command": ["teich", "twin", "--point", P_BASE_FREE],
        "expected": {"twin": None},
    },
    # ------------------------------------------------------------ fol
    "fol_cf_golden": {
        "command": ["fol", "cf", "--alpha", GOLDEN],
        "expected": {"preperiod": [], "period": [1]},
    },
    "fol_cf_mixed_surd": {
        "command": ["fol", "cf", "--alpha", SQRT2_SHIFT7],
        "expected": {"preperiod": [0, 1, 1, 1], "period": [2]},
    },
    "fol_cf_negative_rational": {
        "command": ["fol", "cf", "--alpha=-7/3"],
        "expected": {"preperiod": [-3, 1, 2], "period": []},
    },
    "fol_cf_rational": {
        "command": ["fol", "cf", "--alpha", "7/3"],
        "expected": {"preperiod": [2, 3], "period": []},
    },
    "fol_cf_sqrt2": {
        "command": ["fol", "cf", "--alpha", SQRT2],
        "expected": {"preperiod": [1], "period": [2]},
    },
    "fol_cf_error_zero_denominator": {
        "command": ["fol", "cf", "--alpha", "1/0"],
        "exit": 2,
    },
    "fol_leaf_dense": {
        "command": ["fol", "leaf", "--alpha", SQRT2],
        "expected": {"kind": "dense_line"},
    },
    "fol_leaf_integer": {
        "command": ["fol", "leaf", "--alpha", "5"],
        "expected": {"kind": "closed", "vertical": 5, "horizontal": 1},
    },
    "fol_leaf_rational": {
        "command": ["fol", "leaf", "--alpha", "2/3"],
        "expected": {"kind": "closed", "vertical": 2, "horizontal": 3},
    },
    "fol_leaf_unreduced": {
        "command": ["fol", "leaf", "--alpha", "4/6"],
        "expected": {"kind": "closed", "vertical": 2, "horizontal": 3},
    },
    "fol_leafspace_circle": {
        "command": ["fol", "leafspace", "--alpha", "2/3"],
        "expected": {"kind": "circle", "deck_order": 3},
    },
    "fol_leafspace_nonhausdorff": {
        "command": ["fol", "leafspace", "--alpha", SQRT2],
        "expected": {"kind": "non_hausdorff"},
    },
    "fol_morita_golden_vs_sqrt5": {
        "command": ["fol", "morita", "--alpha", GOLDEN, "--beta", SQRT5],
        "expected": {"equivalent": False},
    },
    "fol_morita_mixed_false": {
        "command": ["fol", "morita", "--alpha", "1/2", "--beta", SQRT2],
        "expected": {"equivalent": False},
    },
    "fol_morita_rationals_true": {
        "command": ["fol", "morita", "--alpha", "7/3", "--beta", "1/2"],
        "expected": {"equivalent": True},
    },
    "fol_morita_reciprocal_true": {
        "command": ["fol", "morita", "--alpha", SQRT2, "--beta", SQRT2_RECIP],
        "expected": {"equivalent": True},
    },
    "fol_morita_translate_true": {
        "command": ["fol", "morita", "--alpha", SQRT2, "--beta", SQRT2_PLUS1],
        "expected": {"equivalent": True},
    },
    "fol_orbit_error_off_circle": {
        "command": ["fol", "orbit", "--z0", "0.5", "0", "--alpha", "1/3", "--max-points", "2"],
        "exit": 1,
        "expected_error": {
            "error": "not_on_circle",
            "message": "orbit start (0.5+0j) is not on the unit circle",
        },
    },
    "fol_orbit_four_points": {
        "command": ["fol", "orbit", "--z0", "1", "0", "--alpha", "1/4", "--max-points", "10"],
        "expected": {
            "points": [
                [1, 0],
                [6.12323399574e-17, 1],
                [-1, 1.22464679915e-16],
                [-1.83697019872e-16, -1],
            ]
        },
    },
    "fol_orbit_truncated": {
        "command": ["fol", "orbit", "--z0", "1", "0", "--alpha", "1/3", "--max-points", "2"],
        "expected": {"points": [[1, 0], [-0.5, 0.866025403784]]},
    },
    # ------------------------------------------------------------ atlas
    "atlas_check_error_samples": {
        "command": ["atlas", "check", "--samples", "0"],
        "exit": 1,
        "expected_error": {
            "error": "invalid_input",
            "message": "samples must be a positive integer, got 0",
        },
    },
    "atlas_check_trivial_fifty": {
        "command": ["atlas", "check", "--structure", "trivial", "--samples", "50", "--seed", "1"],
        "expected": {
            "structure": "trivial",
            "samples": 50,
            "seed": 1,
            "passed": True,
            "laws": _TRIVIAL_LAWS,
        },
    },
    "atlas_ginv_diagonal": {
        "command": ["atlas", "ginv", "--x", G_DIAG21_T4],
        "expected": {"result": {"a": [[[0.5, 0], [0, 0]], [[0, 0], [1, 0]]], "t": [-2, 0]}},
    },
    "atlas_gmul_det_negative": {
        "command": ["atlas", "gmul", "--x", G_SWAP_T2, "--y", G_ID_T3],
        "expected": {"result": {"a": [[[0, 0], [1, 0]], [[1, 0], [0, 0]]], "t": [-1, 0]}},
    },
    "atlas_gmul_error_singular": {
        "command": ["atlas", "gmul", "--x", G_SINGULAR, "--y", G_IDENTITY],
        "exit": 1,
        "expected_error": {
            "error": "singular_matrix",
            "message": "group element needs an invertible matrix, det = 0j",
        },
    },
    "atlas_gmul_twist": {
        "command": ["atlas", "gmul", "--x", G_DIAG21_T1, "--y", G_ID_T3],
        "expected": {"result": {"a": [[[2, 0], [0, 0]], [[0, 0], [1, 0]]], "t": [7, 0]}},
    },
    "atlas_source_projection": {
        "command": ["atlas", "source", "--g", G_SHEAR, "--m", A_POINT],
        "expected": {"point": {"a": [[[0.5, 0], [0, 0]], [[0, 0], [0.25, 0]]], "t": [0, 1]}},
    },
    "atlas_target_broken_conjugates": {
        "command": ["atlas", "target", "--g", G_SHEAR, "--m", A_POINT, "--structure", "broken"],
        "expected": {"point": {"a": [[[0.5, 0], [0.25, 0]], [[0, 0], [0.25, 0]]], "t": [0, 1]}},
    },
    "atlas_target_trivial": {
        "command": ["atlas", "target", "--g", G_SHEAR, "--m", A_POINT, "--structure", "trivial"],
        "expected": {"point": {"a": [[[0.5, 0], [0, 0]], [[0, 0], [0.25, 0]]], "t": [0, 1]}},
    },
    "atlas_zaction_broken_shears": {
        "command": [
            "atlas", "zaction", "--p", "1", "--g", G_IDENTITY, "--m", A_POINT,
            "--structure", "broken",
        ],
        "expected": {
            "g": {"a": [[[0.5, 0], [0.25, 0]], [[0, 0], [0.25, 0]]], "t": [0, 0]},
            "m": {"a": [[[0.5, 0], [0, 0]], [[0, 0], [0.25, 0]]], "t": [0, 1]},
        },
    },
    "atlas_zaction_error_expanding": {
        "command": ["atlas", "zaction", "--p", "1", "--g", G_IDENTITY, "--m", A_EXPANDING],
        "exit": 1,
        "expected_error": {
            "error": "not_contracting",
            "message": "atlas point needs a contracting matrix, "
            "got Matrix2C(a=(1.5+0j), b=0j, c=0j, d=(0.5+0j))",
        },
    },
    "atlas_zaction_trivial_fixes": {
        "command": ["atlas", "zaction", "--p", "3", "--g", G_IDENTITY_T1, "--m", A_POINT],
        "expected": {
            "g": {"a": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]], "t": [1, 0]},
            "m": {"a": [[[0.5, 0], [0, 0]], [[0, 0], [0.25, 0]]], "t": [0, 1]},
        },
    },
    # ------------------------------------------------------------ cli plumbing
    "cli_empty_command": {
        "command": [],
        "exit": 2,
    },
    "cli_unknown_verb": {
        "command": ["tori", "banana"],
        "exit": 2,
    },
}


def main() -> int:
    out = ROOT / "fixtures"
    out.mkdir(exist_ok=True)
    wanted = {f"{name}.json" for name in CORPUS}
    for stale in sorted(set(p.name for p in out.glob("*.json")) - wanted):
        (out / stale).unlink()
    for name, doc in sorted(CORPUS.items()):
        (out / f"{name}.json").write_text(json.dumps(doc, indent=2) + "\n")

    summary = run_fixtures(out)
    print(json.dumps({k: summary[k] for k in ("total", "passed", "failed", "byte_exact")}))
    for failure in summary["failures"]:
        print(f"  {failure['fixture']}: {failure['reason']}", file=sys.stderr)
    if summary["failed"] or not summary["byte_exact"]:
        return 1
    print(f"wrote {len(CORPUS)} fixtures to {out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
