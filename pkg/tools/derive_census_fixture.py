"""Regenerate ``src/charslope/data/census.jsonl`` from the low-volume table.

Offline helper; needs SnapPy (``pip install snappy``), which the library
itself never imports.  Names, volumes, link identifications and solid-torus
filling lists are transcribed by hand below.  SnapPy is used to compute
H_1(M), to check the S^1 x S^2 filling M((1,0),(a,b)) has H_1 = Z, and to
compute H_1(M((0,1),(a,b))), which is stored as ``alt_h1``.
"""

import json
import sys
from pathlib import Path

import snappy

# (name, volume, (a, b) or None)
TABLE = [
    ("m129", "3.6638623767", None),
    ("m125", "3.6638623767", (4, 3)),
    ("m202", "4.0597664256", (5, 3)),
    ("m203", "4.0597664256", (0, 1)),
    ("m292", "4.4153324775", (-4, 5)),
    ("m295", "4.4153324775", (3, 2)),
    ("m328", "4.5559188899", (5, 4)),
    ("m329", "4.5559188899", (7, 5)),
    ("m357", "4.7254015851", (11, 7)),
    ("m359", "4.7254015851", (1, 2)),
    ("m366", "4.7494999819", (-5, 7)),
    ("m367", "4.7494999819", (3, 1)),
    ("s441", "4.7517019655", (5, 6)),
    ("s443", "4.7517019655", (-4, 3)),
    ("m388", "4.8511707573", (5, 8)),
    ("m391", "4.8511707573", (1, 1)),
    ("s503", "4.8937641326", (-10, 7)),
    ("s506", "4.8937641326", (-6, 5)),
    ("v1060", "4.9327140585", (5, 4)),
    ("v1061", "4.9327140585", (6, 7)),
    ("s548", "4.9767702943", (-14, 9)),
    ("s549", "4.9767702943", (2, 3)),
    ("s568", "5.0294944813", (5, 3)),
    ("s569", "5.0294944813", (-7, 9)),
    ("t02501", "5.0411812564", (-6, 5)),
    ("t02502", "5.0411812564", (7, 8)),
    ("s576", "5.0425492156", (-11, 8)),
    ("s577", "5.0425492156", (9, 7)),
    ("s578", "5.0448991629", (5, 1)),
    ("s579", "5.0448991629", (-7, 10)),
    ("v1178", "5.0533214945", (-7, 6)),
    ("v1180", "5.0533214945", (13, 9)),
    ("m412", "5.0747080321", None),
    ("s596", "5.0747080321", None),
    ("s601", "5.0826538415", (-7, 11)),
    ("s602", "5.0826538415", (-2, 1)),
    ("v1203", "5.0990348432", (-17, 11)),
    ("v1204", "5.0990348432", (3, 4)),
    ("s621", "5.1062718035", (-5, 2)),
    ("s622", "5.1062718035", (8, 11)),
    ("o9_05655", "5.1111665875", (8, 9)),
    ("o9_05656", "5.1111665875", (7, 6)),
    ("s637", "5.1273136230", (19, 12)),
    ("s638", "5.1273136230", (-1, 3)),
    ("s647", "5.1379412019", (-5, 3)),
    ("t02727", "5.1401504513", (-8, 7)),
    ("t02728", "5.1401504513", (16, 11)),
    ("v1252", "5.1503497145", (9, 11)),
    ("v1253", "5.1503497145", (-7, 5)),
    ("s660", "5.1549263093", (-8, 13)),
    ("s661", "5.1549263093", (-1, 2)),
    ("v1263", "5.1621342201", (-6, 1)),
    ("v1264", "5.1621342201", (-9, 13)),
    ("t02749", "5.1676956678", (4, 5)),
    ("t02750", "5.1676956678", (-20, 13)),
    ("v1284", "5.1799776154", None),
    ("v1285", "5.1799776154", None),
]

LINKS = {
    "m125": ("L13n5885", 5),
    "m203": ("L6a2", 3),
    "m295": ("L9n14", 1),
    "m367": ("L7a6", 1),
    "m391": ("L8a12", 4),
    "s443": ("L11n208", 2),
    "s578": ("L9a364", 2),
    "s602": ("L10a114", 5),
    "s647": ("L12n1027", 2),
    "v1060": ("L13n5895", 3),
    "v1263": ("L11a360", 3),
}

MULTI_SOLID_TORUS = {
    "m202": [[1, 0], [0, 1], [-1, 1]],
    "m329": [[1, 0], [0, 1]],
    "m357": [[1, 0], [0, 1]],
    "m366": [[1, 0], [0, 1]],
    "m388": [[1, 0], [0, 1]],
    "s503": [[1, 0], [0, 1]],
    "s548": [[1, 0], [0, 1]],
    "s579": [[1, 0], [0, 1]],
    "s601": [[1, 0], [0, 1]],
    "v1180": [[1, 0], [0, 1]],
    "v1203": [[1, 0], [0, 1]],
    "v1264": [[1, 0], [0, 1]],
    "t02728": [[1, 0], [0, 1]],
    "t02750": [[1, 0], [0, 1]],
}

# Torsion-bearing records have no solid-torus filling recorded.
NO_FILLING_DATA = {"m412", "s596"}


def group_json(g):
    coeffs = list(g.coefficients)
    rank = sum(1 for c in coeffs if c == 0)
    torsion = sorted(int(c) for c in coeffs if c > 1)
    return {"rank": rank, "torsion": torsion}


def record(name, volume, ab):
    M = snappy.Manifold(name)
    assert M.num_cusps() == 2, name
    assert abs(float(M.volume()) - float(volume)) < 1e-8, (name, M.volume())
    rec = {
        "name": name,
        "volume": volume,
        "h1": group_json(M.homology()),
        "link": None,
        "solid_torus_fillings": [],
        "free_obstruction": None,
    }
    if name in LINKS:
        link_name, w = LINKS[name]
        rec["link"] = {"link_name": link_name, "linking_number": w}
    if name in MULTI_SOLID_TORUS:
        rec["solid_torus_fillings"] = [MULTI_SOLID_TORUS[name]]
    elif name not in NO_FILLING_DATA:
        rec["solid_torus_fillings"] = [[[1, 0]]]
    if ab is not None:
        N = M.copy()
        N.dehn_fill([(1, 0), ab])
        assert group_json(N.homology()) == {"rank": 1, "torsion": []}, name
        N = M.copy()
        N.dehn_fill([(0, 1), ab])
        rec["free_obstruction"] = {"ab": list(ab), "alt_h1": group_json(N.homology())}
    return rec


def main(out):
    with open(out, "w") as fh:
        for name, volume, ab in TABLE:
            fh.write(json.dumps(record(name, volume, ab), separators=(",", ":")) + "\n")


if __name__ == "__main__":
    default = Path(__file__).resolve().parents[1] / "src" / "charslope" / "data" / "census.jsonl"
    main(sys.argv[1] if len(sys.argv) > 1 else default)
