"""Regenerate the bundled input files under ``data/``.

Run from the repository root:  python demos/make_data.py
"""

import json
from pathlib import Path

from conley_kit import ChainComplex, Gf2Matrix, builtin, chafee_infante, delay_scenario, from_cw
from conley_kit.io import complex_to_json, scenario_to_json, ses_to_json
from conley_kit.zigzag import split_ses, twist_extension

DATA = Path(__file__).resolve().parent.parent / "data"


def saddle_ses():
    # a: one class in degree 1, c: one class in degree 2, b glues them
    a = ChainComplex((0, 1))
    c = ChainComplex((0, 0, 1))
    return twist_extension(a, c, {2: Gf2Matrix.identity(1)})


def circle_sphere_twist():
    a = from_cw(builtin("circle"))
    c = from_cw(builtin("sphere_minimal", 2))
    return twist_extension(a, c, {2: Gf2Matrix.identity(1)})


def files():
    yield "sphere_minimal2.json", complex_to_json(builtin("sphere_minimal", 2))
    yield "sphere_equator.json", complex_to_json(builtin("sphere_equator"))
    yield "circle.json", complex_to_json(builtin("circle"))
    yield "ses_split.json", ses_to_json(
        split_ses(from_cw(builtin("sphere_minimal", 2)), from_cw(builtin("circle")))
    )
    yield "ses_saddle.json", ses_to_json(saddle_ses())
    yield "ses_twist.json", ses_to_json(circle_sphere_twist())
    yield "delay.json", scenario_to_json(*delay_scenario())
    yield "ci1.json", scenario_to_json(*chafee_infante(1))


if __name__ == "__main__":
    DATA.mkdir(exist_ok=True)
    for name, doc in files():
        (DATA / name).write_text(json.dumps(doc, indent=2) + "\n")
        print("wrote", DATA / name)
