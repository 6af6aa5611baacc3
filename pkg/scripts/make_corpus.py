"""Regenerate the bundled corpus under src/planehodge/corpus/.

    python scripts/make_corpus.py
"""

import json
from itertools import combinations
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "planehodge" / "corpus"

FREE_DIVISOR = "x*y*z*(x^3+y^3+z^3)*((x^3+y^3+z^3)^3-27*x^3*y^3*z^3)"


def smooth(a, b):
    return {"incidences": [{"component": a}, {"component": b}]}


def generic_lines(k, poly=None, name=None):
    spec = {
        "name": name or f"{k} lines in general position",
        "components": [{"label": f"L{i}", "degree": 1} for i in range(k)],
        "shared_points": [smooth(a, b) for a, b in combinations(range(k), 2)],
    }
    if poly:
        spec["polynomial"] = poly
    return spec


def free_divisor():
    # Hesse configuration: the 9 base points of the pencil <x^3+y^3+z^3, xyz>
    # form the affine plane over F_3, the 12 lines of the four singular
    # fibres (triangles) are its affine lines, one parallel class per triangle.
    points = [(a, b) for a in range(3) for b in range(3)]
    directions = [(1, 0), (0, 1), (1, 1), (1, 2)]
    lines = []
    for d in directions:
        seen = set()
        for p in points:
            line = frozenset(((p[0] + t * d[0]) % 3, (p[1] + t * d[1]) % 3) for t in range(3))
            if line not in seen:
                seen.add(line)
                lines.append((d, line))
    components = [{"label": f"T{directions.index(d)}.{i % 3}", "degree": 1, "genus_check": 0}
                  for i, (d, _) in enumerate(lines)]
    components.append({"label": "E: x^3+y^3+z^3", "degree": 3, "genus_check": 1})
    elliptic = len(components) - 1
    shared = []
    for pt in points:
        on = [i for i, (_, line) in enumerate(lines) if pt in line]
        assert len(on) == 4
        shared.append({
            "label": f"base point {pt}",
            "incidences": [{"component": i} for i in on] + [{"component": elliptic}],
            "transverse": True,
            "tjurina": 16,
        })
    for t in range(4):
        members = [i for i, (d, _) in enumerate(lines) if d == directions[t]]
        for a, b in combinations(members, 2):
            shared.append({"label": f"vertex of triangle {t}",
                           **smooth(a, b)})
    return {
        "name": "free divisor: 12 lines of the Hesse pencil and the Fermat cubic",
        "polynomial": FREE_DIVISOR,
        "components": components,
        "shared_points": shared,
    }


def fermat(N):
    return {
        "name": f"smooth Fermat curve of degree {N}",
        "polynomial": f"x^{N}+y^{N}+z^{N}",
        "components": [{"degree": N, "genus_check": (N - 1) * (N - 2) // 2}],
    }


CORPUS = {
    "two_transverse_lines": generic_lines(2, "x*y", "two lines"),
    "three_generic_lines": generic_lines(3, "x*y*z", "three lines in general position"),
    "four_generic_lines": generic_lines(4, "x*y*z*(x+y+z)", "four lines in general position"),
    "six_generic_lines": generic_lines(6),
    "three_concurrent_lines": {
        "name": "three lines through one point",
        "polynomial": "x*y*(x+y)",
        "components": [{"degree": 1}, {"degree": 1}, {"degree": 1}],
        "shared_points": [{"incidences": [{"component": 0}, {"component": 1},
                                          {"component": 2}]}],
    },
    "smooth_conic": {
        "name": "smooth conic",
        "polynomial": "x^2+y^2+z^2",
        "components": [{"degree": 2, "genus_check": 0}],
    },
    "fermat_cubic": fermat(3),
    "fermat_quartic": fermat(4),
    "fermat_quintic": fermat(5),
    "fermat_sextic": fermat(6),
    "nodal_cubic": {
        "name": "nodal cubic",
        "polynomial": "z*y^2-x^2*(x+z)",
        "components": [{"degree": 3, "genus_check": 0, "own_germs": ["node"]}],
    },
    "tricuspidal_quartic": {
        "name": "tricuspidal quartic",
        "polynomial": "x^2*y^2+y^2*z^2+z^2*x^2-2*x*y*z*(x+y+z)",
        "components": [{"degree": 4, "genus_check": 0,
                        "own_germs": ["cusp", "cusp", "cusp"]}],
    },
    "cubic_and_line": {
        "name": "Fermat cubic and a transverse line",
        "polynomial": "(x^3+y^3+z^3)*(x+2*y+3*z)",
        "components": [{"label": "E", "degree": 3, "genus_check": 1},
                       {"label": "L", "degree": 1}],
        "shared_points": [smooth(0, 1) for _ in range(3)],
    },
    "bitangent_conics": {
        "name": "two conics tangent at two points",
        "polynomial": "(x^2+y^2-z^2)*(x^2+2*y^2-z^2)",
        "components": [{"degree": 2}, {"degree": 2}],
        "shared_points": [
            {"label": f"tacnode {s}", "transverse": False, "mu": 3, "tjurina": 3,
             "weighted_homogeneous": True,
             "incidences": [{"component": 0}, {"component": 1}]}
            for s in ("+", "-")
        ],
    },
    "quartic_triple_point_and_line": {
        "name": "quartic with an ordinary triple point and a line through it",
        "polynomial": "(x+y)*(z*(x^3-y^3)+x^4+y^4)",
        "components": [{"label": "Q", "degree": 4, "genus_check": 0},
                       {"label": "L", "degree": 1}],
        "shared_points": [
            {"label": "4-fold point (0:0:1)", "transverse": True,
             "incidences": [{"component": 0, "germ": "ordinary:3"}, {"component": 1}]},
            {"label": "node (-1:1:1)", **smooth(0, 1)},
        ],
    },
    "sextic_four_nodes": {
        "name": "irreducible sextic with four nodes",
        "components": [{"degree": 6, "own_germs": ["node"] * 4}],
    },
    "free_divisor": free_divisor(),
}

# Inputs that must be rejected or flagged.
INVALID = {
    "bad_parity_germ": {
        "name": "germ with mu + branches - 1 odd",
        "components": [{"degree": 4, "own_germs": [{"mu": 2, "branches": 2}]}],
    },
    "sextic_four_triple_points": {
        "name": "sextic with four ordinary triple points (delta 12 > 10)",
        "components": [{"degree": 6, "own_germs": ["ordinary:3"] * 4}],
    },
    "fermat_cubic_false_genus": {
        "name": "Fermat cubic declared rational",
        "polynomial": "x^3+y^3+z^3",
        "components": [{"degree": 3, "genus_check": 0}],
    },
    "fermat_cubic_false_cusp": {
        "name": "Fermat cubic described as a cuspidal cubic",
        "polynomial": "x^3+y^3+z^3",
        "components": [{"degree": 3, "own_germs": ["cusp"]}],
    },
    "quartic_triple_point_and_line_missing_node": {
        "name": "quartic with a triple point and a line through it, residual node omitted",
        "components": [{"label": "Q", "degree": 4}, {"label": "L", "degree": 1}],
        "shared_points": [
            {"incidences": [{"component": 0, "germ": "ordinary:3"}, {"component": 1}]},
        ],
    },
}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, spec in {**CORPUS, **{f"negative_{k}": v for k, v in INVALID.items()}}.items():
        (OUT / f"{name}.json").write_text(json.dumps(spec, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {len(CORPUS) + len(INVALID)} files to {OUT}")


if __name__ == "__main__":
    main()
