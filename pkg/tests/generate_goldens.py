"""
Regenerate the golden outputs of the documented invocations.

Run it from the repository root after an intended change of the output:

    python tests/generate_goldens.py

and review the diff of tests/fixtures/golden before committing it.
"""
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.realpath(__file__))))

from main_tests import FIXTURES, TestGoldens, invoke  # noqa: E402


def generate():
    os.environ["HOME"] = FIXTURES
    directory = os.path.join(FIXTURES, "golden")
    os.makedirs(directory, exist_ok=True)
    for name, argv in TestGoldens.GOLDENS:
        code, out, err = invoke(argv)
        if code != 0:
            sys.exit("{}: dielfet {} failed: {}".format(name, " ".join(argv), err.strip()))
        with open(os.path.join(directory, name), "w", newline="") as stream:
            stream.write(out)
        print("wrote {}".format(name))


if __name__ == "__main__":
    generate()
