"""Golden command table for the CLI tests.

test_cli.py runs every command here in process and compares the rendered
transcript against tests/golden/<name>.txt. After an intentional output
change, rebuild the files with

    python3 tests/cli_commands.py

Input documents are generated by the library writers so the goldens never
depend on checked-in data files; the transcripts show the command template
with {placeholders} so they are path independent.
"""

import io
import tempfile
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

from skewpbw import (
    GammaDerivation,
    GeneratorBracket,
    ToricAutomorphism,
    build_example,
    inner_apply,
    inner_derivation,
    localize_presentation,
    parse_element,
    write_bracket,
    write_derivation,
    write_presentation,
)
from skewpbw.cli import main

GOLDEN_DIR = Path(__file__).resolve().parent / "golden"


def build_inputs(dirpath):
    """Write the input documents and return {placeholder: path}."""
    dirpath = Path(dirpath)
    qp = build_example("qdiff")
    qpl = localize_presentation(qp)
    sq3 = build_example("quantum_space", n=3)
    s3z = build_example("skew3d", v="z")
    F = qpl.field
    ident = ToricAutomorphism.identity(qpl)
    eng3 = sq3.engine()

    double13 = {
        (i, j): eng3.commutator(sq3.gen(i), sq3.gen(j))
        for i in (1, 2)
        for j in range(i + 1, 4)
    }
    double13[(1, 3)] = double13[(1, 3)].scale(sq3.field.from_int(2))

    z = parse_element(qpl, "y*x")
    lam = (F.from_int(2), F.param("q"))
    mixed = GammaDerivation(
        ident,
        [
            qpl.gen(i).scale(lam[i - 1]) + inner_apply(ident, z, qpl.gen(i))
            for i in (1, 2)
        ],
    )

    docs = {
        "qp": write_presentation(qp),
        "qpl": write_presentation(qpl),
        "sq3": write_presentation(sq3),
        "s3z": write_presentation(s3z),
        "xi1": write_bracket(GeneratorBracket.xi_commutator(qp, 1)),
        "bad": write_bracket(GeneratorBracket(qp, {(1, 2): qp.gen(1)})),
        "double13": write_bracket(GeneratorBracket(sq3, double13)),
        "inner": write_derivation(inner_derivation(ident, parse_element(qpl, "y^-1*x"))),
        "notder": write_derivation(GammaDerivation(ident, [qpl.gen(2), qpl.zero()])),
        "mixed": write_derivation(mixed),
        "g2": write_derivation(
            GammaDerivation(
                ToricAutomorphism(qpl, [F.from_int(2), F.one]), [qpl.zero()] * 2
            )
        ),
    }
    paths = {}
    for key, text in docs.items():
        path = dirpath / f"{key}.txt"
        path.write_text(text)
        paths[key] = str(path)
    return paths


COMMANDS = [
    ("examples-list", ["examples", "list", "--machine"]),
    ("examples-show", ["examples", "show", "skew3d", "--v", "z", "--machine"]),
    ("examples-show-pretty", ["examples", "show", "qdiff"]),
    ("normalize", ["normalize", "{qp}", "x*y + y*x", "--machine"]),
    ("normalize-pretty", ["normalize", "{sq3}", "x3*x2*x1"]),
    ("mul", ["mul", "{qp}", "y + x", "y - x", "--machine"]),
    ("mul-chain", ["mul", "{qpl}", "y^-1", "x", "y", "--machine"]),
    ("commutator", ["commutator", "{qp}", "y", "x", "--machine"]),
    ("bracket", ["bracket", "{qpl}", "y^-1", "x", "--bracket", "{xi1}", "--machine"]),
    (
        "verify-ok",
        ["verify-poisson", "{qp}", "--bracket", "{xi1}", "--samples", "10", "--machine"],
    ),
    (
        "verify-fail",
        ["verify-poisson", "{qp}", "--bracket", "{bad}", "--samples", "5", "--machine"],
    ),
    ("classify", ["classify", "{qp}", "--bracket", "{xi1}", "--machine"]),
    ("classify-fail", ["classify", "{sq3}", "--bracket", "{double13}", "--machine"]),
    (
        "check-derivation",
        ["check-derivation", "{qpl}", "--derivation", "{inner}", "--machine"],
    ),
    (
        "check-derivation-fail",
        ["check-derivation", "{qpl}", "--derivation", "{notder}", "--machine"],
    ),
    (
        "decompose",
        ["decompose-derivation", "{qpl}", "--derivation", "{mixed}", "--machine"],
    ),
    ("adjoint-preimage", ["adjoint-preimage", "{qpl}", "x", "--machine"]),
    (
        "adjoint-preimage-gamma",
        ["adjoint-preimage", "{qpl}", "x", "--gamma", "{g2}", "--machine"],
    ),
    ("localize", ["localize", "{qp}", "--machine"]),
    ("localize-bracket", ["localize", "{qp}", "--bracket", "{xi1}", "--machine"]),
    ("validate-ok", ["validate", "{qp}", "--purpose", "poisson", "--machine"]),
    ("validate-fail", ["validate", "{s3z}", "--purpose", "laurent", "--machine"]),
    ("usage-error", ["normalize", "{qp}", "x*"]),
]


def expand(template, paths):
    return [arg.format(**paths) for arg in template]


def run(argv):
    """Run the CLI in process; returns (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        try:
            code = main(argv)
        except SystemExit as exc:  # argparse usage failures
            code = exc.code if isinstance(exc.code, int) else 2
    return code, out.getvalue(), err.getvalue()


def render(template, code, stdout, stderr):
    text = f"$ skewpbw {' '.join(template)}\nexit {code}\n{stdout}"
    if stderr:
        text += f"--- stderr ---\n{stderr}"
    return text


def regenerate():
    GOLDEN_DIR.mkdir(exist_ok=True)
    with tempfile.TemporaryDirectory() as tmp:
        paths = build_inputs(tmp)
        for name, template in COMMANDS:
            code, stdout, stderr = run(expand(template, paths))
            (GOLDEN_DIR / f"{name}.txt").write_text(render(template, code, stdout, stderr))
            print(f"wrote golden/{name}.txt (exit {code})")


if __name__ == "__main__":
    regenerate()
