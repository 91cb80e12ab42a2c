"""
Running the command-line tool
=============================

The same computations are available from the shell:

    clifford-antiaut clifford --spec problem.json --pretty
    clifford-antiaut selftest --seed 0 --count 10 --table

Rationals are written as integers or "p/q" strings.  The exit code is 0 on
success, 1 on an input error and 2 when the computed class differs from the
predicted one.
"""

import json
import tempfile

from clifford_antiaut.cli import main

batch = [
    {"kind": "bilinear", "matrix": [[1, 0], [0, -1]]},
    {"kind": "quaternion", "alpha": 2, "beta": 3, "u": [0, 1, 0, 0]},
    {"kind": "matrix_adjoint", "matrix": [[1, 2], [2, "1/3"]]},
]
with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
    json.dump(batch, fh)

###############################################################################
# A batch of three problems; each report carries its input back.

code = main(["clifford", "--spec", fh.name, "--pretty"])
print("exit code", code)

###############################################################################
# A non-involutive quaternion antiautomorphism gives exit code 2.

with open(fh.name, "w") as out:
    json.dump({"kind": "quaternion", "alpha": 2, "beta": 3, "u": [1, 1, 0, 0]}, out)
print("exit code", main(["clifford", "--spec", fh.name]))

###############################################################################
# The built-in suites.

print("exit code", main(["selftest", "--seed", "0", "--count", "5", "--table"]))
