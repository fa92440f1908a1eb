#!/usr/bin/env python3
# Copyright 2026 The tsmap Authors
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
"""Writes the generated benchmark circuits into benchmarks/.

These stand in for circuits whose original files are not redistributable
here: a 4-qubit decoder built from Toffolis, 1D transverse-field Ising
Trotter circuits and textbook QFTs.
"""

import argparse
import pathlib

HEADER = 'OPENQASM 2.0;\ninclude "qelib1.inc";\n'


def ccx(a, b, c):
    # Standard 6-CNOT Toffoli.
    return [
        f"h q[{c}];", f"cx q[{b}],q[{c}];", f"tdg q[{c}];", f"cx q[{a}],q[{c}];",
        f"t q[{c}];", f"cx q[{b}],q[{c}];", f"tdg q[{c}];", f"cx q[{a}],q[{c}];",
        f"t q[{b}];", f"t q[{c}];", f"h q[{c}];", f"cx q[{a}],q[{b}];",
        f"t q[{a}];", f"tdg q[{b}];", f"cx q[{a}],q[{b}];",
    ]


def decod24():
    body = ["x q[0];", "x q[1];"]
    body += ccx(0, 1, 3)
    body += ["x q[0];", "x q[1];"]
    body += ccx(0, 1, 2)
    body += ["cx q[2],q[3];", "cx q[0],q[1];", "cx q[1],q[0];"]
    body += ccx(2, 3, 1)
    return 4, body


def ising(n, steps=5, j=0.5, h=1.0, dt=0.1):
    body = [f"h q[{i}];" for i in range(n)]
    for _ in range(steps):
        for i in range(n - 1):
            body += [f"cx q[{i}],q[{i + 1}];", f"rz({-2 * j * dt:.6f}) q[{i + 1}];",
                     f"cx q[{i}],q[{i + 1}];"]
        body += [f"rx({-2 * h * dt:.6f}) q[{i}];" for i in range(n)]
    return n, body


def qft(n):
    body = []
    for i in range(n):
        body.append(f"h q[{i}];")
        for k in range(i + 1, n):
            lam = f"pi/{2 ** (k - i)}"
            half = f"pi/{2 ** (k - i + 1)}"
            # cu1(lam) between q[k] and q[i].
            body += [f"u1({half}) q[{k}];", f"cx q[{k}],q[{i}];", f"u1(-{half}) q[{i}];",
                     f"cx q[{k}],q[{i}];", f"u1({half}) q[{i}];"]
    return n, body


def emit(path, n, body):
    text = HEADER + f"qreg q[{n}];\ncreg c[{n}];\n" + "\n".join(body) + "\n"
    text += "".join(f"measure q[{i}] -> c[{i}];\n" for i in range(n))
    path.write_text(text)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("out", nargs="?", default=pathlib.Path(__file__).parent.parent / "benchmarks",
                    type=pathlib.Path)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    emit(args.out / "decod24-v2_43.qasm", *decod24())
    for n in (10, 13, 16):
        emit(args.out / f"ising_model_{n}.qasm", *ising(n))
    for n in (10, 16):
        emit(args.out / f"qft_{n}.qasm", *qft(n))


if __name__ == "__main__":
    main()
