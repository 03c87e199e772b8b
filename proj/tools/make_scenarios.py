# Copyright 2026 The locreal Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes the bundled scenario corpus into scenarios/."""

import json
import math
import pathlib
import random

OUT = pathlib.Path(__file__).resolve().parent.parent / "scenarios"

STANDARD = {"gamma": [[1, 1], [1, -1]], "constraint": "row"}
ALTERNATE = {"gamma": [[1, -1], [1, 1]], "constraint": "row"}
COLUMN = {"gamma": [[1, 1], [-1, 1]], "constraint": "column"}


def write(name, doc, subdir=None):
    path = OUT / subdir / name if subdir else OUT / name
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(doc, indent=2) + "\n")


def binary_row(p_plus):
    return [p_plus, 1.0 - p_plus]


def chsh(alice, bob, coeffs):
    return {"type": "chsh", "alice": alice, "bob": bob, **coeffs}


def classical_image():
    rng = random.Random(11)
    labels = [f"h{i}" for i in range(8)]
    pi = [rng.random() for _ in labels]
    total = sum(pi)
    pi = [p / total for p in pi]
    table = {s: [rng.choice([1, -1]) for _ in labels] for s in ("a1", "a2", "b1", "b2")}
    observables = [
        {"a": a, "b": b, "type": "image", "f1": dict(zip(labels, table[a])), "f2": dict(zip(labels, table[b]))}
        for a in ("a1", "a2")
        for b in ("b1", "b2")
    ]
    write("classical_image.json", {
        "name": "classical_image",
        "description": "Classical joint measurements: deterministic +-1 random variables on eight hidden points.",
        "kind": "info",
        "theta": {"labels": labels, "pi": pi},
        "observables": observables,
        "checks": [
            chsh(["a1", "a2"], ["b1", "b2"], STANDARD),
            chsh(["a1", "a2"], ["b1", "b2"], ALTERNATE),
            {"type": "local_realism"},
        ],
        "simulation": {"n": 100000, "seed": 7},
    })


def product():
    rng = random.Random(12)
    theta = 3
    p1 = {a: [[x := rng.random(), (1 - x) / 2, (1 - x) / 2] for _ in range(theta)] for a in ("a1", "a2")}
    p2 = {b: [binary_row(rng.random()) for _ in range(theta)] for b in ("b1", "b2")}
    observables = [
        {"a": a, "b": b, "type": "product", "outcomes1": [1, 0, -1], "p1": p1[a], "p2": p2[b]}
        for a in ("a1", "a2")
        for b in ("b1", "b2")
    ]
    write("product.json", {
        "name": "product",
        "description": "Product generalized observables; Alice has a three-valued outcome set {1, 0, -1}.",
        "kind": "info",
        "theta": {"labels": ["x", "y", "z"], "pi": [0.2, 0.5, 0.3]},
        "observables": observables,
        "checks": [
            chsh(["a1", "a2"], ["b1", "b2"], STANDARD),
            chsh(["a1", "a2"], ["b1", "b2"], COLUMN),
            {"type": "local_realism"},
        ],
        "simulation": {"n": 100000, "seed": 8},
    })


def factorizable_family(rng, alice, bob, nu, theta):
    comp1 = {a: [[binary_row(rng.random()) for _ in range(theta)] for _ in nu] for a in alice}
    comp2 = {b: [[binary_row(rng.random()) for _ in range(theta)] for _ in nu] for b in bob}
    return [
        {
            "a": a,
            "b": b,
            "type": "factorizable",
            "nu": nu,
            "components": [{"p1": comp1[a][w], "p2": comp2[b][w]} for w in range(len(nu))],
        }
        for a in alice
        for b in bob
    ]


def factorizable_shared_nu():
    rng = random.Random(13)
    write("factorizable_shared_nu.json", {
        "name": "factorizable_shared_nu",
        "description": "Factorizable observables with one distribution nu on Omega shared by all settings.",
        "kind": "info",
        "theta": {"labels": ["t0", "t1"], "pi": [0.4, 0.6]},
        "observables": factorizable_family(rng, ["a1", "a2"], ["b1", "b2"], [0.2, 0.5, 0.3], 2),
        "checks": [
            chsh(["a1", "a2"], ["b1", "b2"], STANDARD),
            chsh(["a1", "a2"], ["b1", "b2"], COLUMN),
            {"type": "local_realism"},
        ],
        "simulation": {"n": 100000, "seed": 9},
    })


def factorizable_setting_nu():
    rng = random.Random(14)
    first = factorizable_family(rng, ["a1", "a2"], ["b1", "b2"], [0.3, 0.7], 2)
    second = factorizable_family(rng, ["a3", "a4"], ["b3", "b4"], [0.25, 0.25, 0.5], 2)
    write("factorizable_setting_nu.json", {
        "name": "factorizable_setting_nu",
        "description": "Two CHSH experiments whose mixing distribution nu depends on the set-up of marginal "
                       "measurements; each experiment shares one nu internally.",
        "kind": "info",
        "theta": {"labels": ["t0", "t1"], "pi": [0.5, 0.5]},
        "observables": first + second,
        "checks": [
            chsh(["a1", "a2"], ["b1", "b2"], STANDARD),
            chsh(["a3", "a4"], ["b3", "b4"], STANDARD),
        ],
        "simulation": {"n": 100000, "seed": 10},
    })


def qubit(deg):
    return {"qubit": {"xz_deg": deg}}


def singlet_chsh():
    write("singlet_chsh.json", {
        "name": "singlet_chsh",
        "description": "Singlet with Alice at 0 and 90 degrees and Bob at 45 and 135 degrees in the x-z plane.",
        "kind": "quantum",
        "states": [{"name": "singlet", "singlet": True}],
        "alice": {"a1": qubit(0), "a2": qubit(90), "b1": qubit(60)},
        "bob": {"b1": qubit(45), "b2": qubit(135), "c1": qubit(60), "c2": qubit(120)},
        "checks": [
            chsh(["a1", "a2"], ["b1", "b2"], ALTERNATE),
            {"type": "bell", "alice_a": "a1", "alice_b1": "b1", "bob_b1": "c1", "bob_b2": "c2", "sign": "+"},
            {"type": "bell", "alice_a": "a1", "alice_b1": "b1", "bob_b1": "c1", "bob_b2": "c2", "sign": "-"},
            {"type": "local_realism"},
        ],
        "simulation": {"n": 100000, "seed": 11},
        "search": {**STANDARD, "seed": 1},
    })


def werner_sweep():
    states = [
        {
            "name": f"p={p}",
            "werner": p,
            "decomposition": {"weights": [1.0], "pairs": [{"tau": {"maximally_mixed": 2}}]},
        }
        for p in (0.0, 0.25, 0.5, 0.75, 1.0)
    ]
    write("werner_sweep.json", {
        "name": "werner_sweep",
        "description": "Werner states p*singlet + (1-p)*I/4 with the reference separable state I/4.",
        "kind": "quantum",
        "states": states,
        "alice": {"a": qubit(0), "a2": qubit(90), "b1": qubit(60)},
        "bob": {"b1": qubit(60), "b2": qubit(120), "c1": qubit(45), "c2": qubit(135)},
        "checks": [
            chsh(["a", "a2"], ["c1", "c2"], ALTERNATE),
            {"type": "quantum_bell_analog", "alice_a": "a", "alice_b1": "b1", "bob_b1": "b1", "bob_b2": "b2"},
            {"type": "local_realism"},
        ],
        "simulation": {"n": 50000, "seed": 12},
        "search": {**STANDARD, "seed": 2},
    })


def separable_perfect_correlation():
    rng = random.Random(15)

    def bloch():
        v = [rng.gauss(0, 1) for _ in range(3)]
        norm = math.sqrt(sum(x * x for x in v))
        r = rng.uniform(0.6, 1.0)
        return [r * x / norm for x in v]

    weights = [0.5, 0.3, 0.2]
    pairs = [{"tau": {"bloch": bloch()}} for _ in weights]
    write("separable_perfect_correlation.json", {
        "name": "separable_perfect_correlation",
        "description": "Separable state sum_j g_j tau_j (x) tau_j with the same observables on both sides.",
        "kind": "quantum",
        "states": [{
            "name": "diagonal",
            "separable": True,
            "decomposition": {"weights": weights, "symmetrized": True, "pairs": pairs},
        }],
        "alice": {"a": qubit(10), "a2": qubit(100), "b1": qubit(70)},
        "bob": {"b1": qubit(70), "b2": qubit(140), "c1": qubit(55), "c2": qubit(145)},
        "checks": [
            {"type": "separable_bell", "alice_a": "a", "alice_b1": "b1", "bob_b1": "b1", "bob_b2": "b2"},
            chsh(["a", "a2"], ["c1", "c2"], ALTERNATE),
            {"type": "local_realism"},
        ],
        "search": {**STANDARD, "seed": 3},
    })


def signaling_counterexample():
    # Deterministic outcome pairs; Alice's a1 outcome flips with Bob's setting.
    def point(l1, l2):
        idx = (0 if l1 == 1 else 1) * 2 + (0 if l2 == 1 else 1)
        row = [0.0] * 4
        row[idx] = 1.0
        return {"type": "opaque", "kernel": [row]}

    pairs = {("a1", "b1"): (1, 1), ("a1", "b2"): (-1, -1), ("a2", "b1"): (1, 1), ("a2", "b2"): (1, -1)}
    write("signaling_counterexample.json", {
        "name": "signaling_counterexample",
        "description": "Joint observables whose Alice marginal depends on Bob's setting (PR-type correlations).",
        "kind": "info",
        "theta": {"uniform": 1},
        "observables": [{"a": a, "b": b, **point(*v)} for (a, b), v in pairs.items()],
        "checks": [
            chsh(["a1", "a2"], ["b1", "b2"], STANDARD),
            {"type": "local_realism"},
        ],
        "simulation": {"n": 10000, "seed": 13},
    })


def match_without_perfect_correlation():
    f = math.sqrt(0.4)
    b1 = [binary_row((1 + f) / 2)]
    a = [binary_row(0.8)]
    b2 = [binary_row(0.35)]
    obs = [
        {"a": "a", "b": "b1", "type": "factorizable", "nu": [1.0], "components": [{"p1": a, "p2": b1}]},
        {"a": "a", "b": "b2", "type": "factorizable", "nu": [1.0], "components": [{"p1": a, "p2": b2}]},
        {"a": "b1", "b": "b2", "type": "factorizable", "nu": [1.0], "components": [{"p1": b1, "p2": b2}]},
    ]
    triple = {"a_b1": ["a", "b1"], "a_b2": ["a", "b2"], "b1_b2": ["b1", "b2"], "sign": "+"}
    write("match_without_perfect_correlation.json", {
        "name": "match_without_perfect_correlation",
        "description": "Marginal-match condition holds with f1(b1) = f2(b1) = sqrt(0.4), so E(b1,b1) = 0.4: "
                       "the Bell inequality holds although the perfect-correlation restriction fails.",
        "kind": "info",
        "theta": {"uniform": 1},
        "observables": obs,
        "checks": [{"type": "bell", **triple}, {"type": "bell_restriction", **triple}],
        "simulation": {"n": 100000, "seed": 14},
    })


def invalid():
    write("malformed_pov.json", {
        "name": "malformed_pov",
        "kind": "quantum",
        "states": [{"name": "singlet", "singlet": True}],
        "alice": {
            "a1": {"outcomes": [1, -1], "elements": [[[1, 0], [0, 0]], [[0, 0], [0, 0.5]]]},
            "a2": qubit(90),
        },
        "bob": {"b1": qubit(45), "b2": qubit(135)},
        "checks": [chsh(["a1", "a2"], ["b1", "b2"], STANDARD)],
    }, "invalid")
    write("operator_match_unmet.json", {
        "name": "operator_match_unmet",
        "kind": "quantum",
        "states": [{
            "name": "werner",
            "werner": 0.5,
            "decomposition": {"weights": [1.0], "pairs": [{"tau": {"maximally_mixed": 2}}]},
        }],
        "alice": {"a": qubit(0), "b1": qubit(60)},
        "bob": {"b1": qubit(30), "b2": qubit(120)},
        "checks": [{"type": "quantum_bell_analog", "alice_a": "a", "alice_b1": "b1", "bob_b1": "b1", "bob_b2": "b2"}],
    }, "invalid")
    (OUT / "invalid" / "syntax_error.json").write_text('{\n  "kind": "info",\n  "theta": {"uniform": 2,}\n}\n')


def main():
    classical_image()
    product()
    factorizable_shared_nu()
    factorizable_setting_nu()
    singlet_chsh()
    werner_sweep()
    separable_perfect_correlation()
    signaling_counterexample()
    match_without_perfect_correlation()
    invalid()


if __name__ == "__main__":
    main()
