import io
import json
import shlex
from contextlib import redirect_stdout
from pathlib import Path

import pytest

from asympoly import cli

GOLDEN_DIR = Path(__file__).parent / "golden"


def run_cli(command: str) -> tuple[int, str]:
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = cli.run(shlex.split(command))
    return code, buf.getvalue()


@pytest.mark.parametrize(
    "golden", sorted(GOLDEN_DIR.glob("*.txt")), ids=lambda p: p.stem
)
def test_golden_commands(golden):
    lines = golden.read_text().splitlines(keepends=True)
    command, expected = lines[0].strip(), "".join(lines[1:])
    code, output = run_cli(command)
    assert code == 0
    assert output == expected


def test_output_is_deterministic():
    command = 'expand --source schubert --index 15324 --target fslide --n 5'
    assert run_cli(command) == run_cli(command)


def test_structured_output_is_json():
    code, output = run_cli('multiply --basis M --a "(2)" --b "(1,2)" --format structured')
    assert code == 0
    payload = json.loads(output)
    assert payload["basis"] == "M"
    assert {"index": [1, 2, 2], "coefficient": 2} in payload["terms"]


def test_usage_errors_exit_2(capsys):
    assert cli.run(["basis", "--id", "nope", "--index", "(1)", "--n", "2"]) == 2
    assert cli.run(["basis", "--id", "key", "--index", "1,0,3", "--n", "3"]) == 2
    assert cli.run(["conjecture", "--name", "unknown"]) == 2
    assert cli.run([]) == 2


def test_verify_exit_codes():
    code, output = run_cli("verify --suite stability")
    assert code == 0
    assert output.strip().endswith("OK")


def test_verify_golden_suite():
    code, output = run_cli("verify --suite golden")
    assert code == 0
    assert "ok schubert 15324 via kohnert" in output


def test_enumerate_ssyt():
    code, output = run_cli('enumerate --object ssyt --index "(2,1)" --n 2')
    assert code == 0
    assert output.strip().splitlines()[-1] == "count 2"
