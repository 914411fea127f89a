"""Named parameter choices used throughout the CLI, the demos and the tests."""

from __future__ import annotations

from .directions import Direction32, Direction33
from .oddzeta import THEOREM3_ETA, DirectionEta

APERY = Direction33((1, 1, 1, 1), (0, 0, 2, 2))
RV_ZETA3 = Direction33((18, 17, 16, 19), (0, 7, 31, 32))
HATA = Direction33((8, 7, 8, 9), (0, 1, 15, 16))
RV_ZETA2 = Direction32((13, 12, 14), (0, 24, 28))
ZU4_EIGHT = DirectionEta(20, (7,) * 21, r=3)

Z3_PRESETS = {"apery": APERY, "rv-zeta3": RV_ZETA3, "hata": HATA}
Z2_PRESETS = {"rv-zeta2": RV_ZETA2}
ODD_PRESETS = {"theorem3": THEOREM3_ETA, "zu4-eight": ZU4_EIGHT}

# orbit mode that goes with each zeta(3) preset
Z3_MODES = {"apery": "full", "rv-zeta3": "full", "hata": "hata"}

# published constants, used by the theorem subcommands to report agreement
THEOREM1_TARGETS = {
    "tau0": "8.44961969",
    "C0": "47.15472079",
    "C1": "48.46940964",
    "psi_integral": "24.18768530",
    "inv_square_integral": "4",
    "C2": "29.81231469",
    "mu_bound": "5.51389062",
}
THEOREM2_TARGETS = {"mu_bound": "5.44124250"}
HATA_TARGETS = {"mu_bound": "7.37795637"}
THEOREM3_TARGETS = {"tau0_re": "87.47900541", "tau0_im": "3.32820690", "C0": "227.58019641", "C2": "226.24944266"}

ALL_PRESETS = sorted(set(Z3_PRESETS) | set(Z2_PRESETS) | set(ODD_PRESETS))
