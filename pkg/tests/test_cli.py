"""
Tests for the command-line surface and the REPL
"""

import io
import json

import pytest

from src.cli import CliConfig, CommandRunner, Repl, build_parser, main
from src.exceptions import ConfigurationException
from src.harness import CaseResult, CheckRun, SuiteReport
from src.utils import EXIT_FUEL_EXHAUSTED, EXIT_OK, EXIT_SUITE_FAILURE, EXIT_USAGE


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue().splitlines(), err.getvalue()


@pytest.fixture(autouse=True)
def _env(clean_env):
    return clean_env


class TestNormalize:
    """lambdalin normalize"""

    def test_prints_the_normal_form(self):
        code, lines, _ = run('normalize', '-e', 'Phase true')
        assert code == EXIT_OK
        assert lines == ['omega8.<true>']

    def test_cancellation(self):
        assert run('normalize', '-e', 'true - true')[1] == ['0v']

    def test_hadamard_involution(self):
        assert run('normalize', '-e', 'H (H false)')[1] == ['<false>']

    def test_fuel_exhausted(self):
        code, lines, _ = run('normalize', '-e', 'Y true', '--fuel', '50')
        assert code == EXIT_FUEL_EXHAUSTED
        assert lines[0] == 'FUEL EXHAUSTED after 50 steps'
        assert len(lines) == 2

    def test_growing_divergence(self):
        growing = '(\\x.(x x (\\y.y))) (\\x.(x x (\\y.y)))'
        code, lines, _ = run('normalize', '-e', growing, '--fuel', '10000')
        assert code == EXIT_FUEL_EXHAUSTED
        assert lines[0].startswith('FUEL EXHAUSTED after ')
        assert len(lines) == 2

    def test_parse_error(self):
        code, lines, err = run('normalize', '-e', 'true )')
        assert code == EXIT_USAGE
        assert lines == []
        assert err.startswith('error: 1:6')
        assert 'true )\n     ^' in err

    def test_machine_format(self):
        code, lines, _ = run('normalize', '-e', 'Not true', '--format', 'machine')
        assert code == EXIT_OK
        assert json.loads(lines[0]) == {'status': 'Normal', 'steps': 3, 'term': '<false>'}

    def test_without_prelude_names(self):
        assert run('normalize', '-e', 'Not true', '--no-prelude-names')[1] == ['\\x.\\y.y']

    def test_without_prelude(self):
        assert run('normalize', '-e', '(\\x.x) y', '--no-prelude')[1] == ['y']
        assert run('normalize', '-e', 'Not true', '--no-prelude')[0] == EXIT_OK

    def test_program_file(self, tmp_path):
        path = tmp_path / 'id.lal'
        path.write_text("let u = \\x.x;\nu true\n", encoding='utf-8')
        assert run('normalize', '-f', str(path))[1] == ['<true>']

    def test_last_binding_without_main_term(self):
        assert run('normalize', '-e', 'let p = Not false;')[1] == ['<true>']

    def test_missing_file(self, tmp_path):
        code, _, err = run('normalize', '-f', str(tmp_path / 'absent.lal'))
        assert code == EXIT_USAGE
        assert err.startswith('error:')

    def test_fuel_from_environment(self, clean_env):
        clean_env.setenv('LAMBDALIN_FUEL', '7')
        assert run('normalize', '-e', 'Y true')[1][0] == 'FUEL EXHAUSTED after 7 steps'


class TestTraceAndParse:
    """lambdalin trace / lambdalin parse"""

    def test_trace_lines(self):
        code, lines, _ = run('trace', '-e', '{[true]}')
        assert code == EXIT_OK
        assert lines == ['1\tB-Beta\t-\t<true>', 'Normal\t<true>']

    def test_trace_machine_records(self):
        _, lines, _ = run('trace', '-e', '{[true]}', '--format', 'machine')
        step, outcome = [json.loads(line) for line in lines]
        assert step['rule'] == 'B-Beta'
        assert step['path'] == '-'
        assert outcome['outcome'] is True
        assert outcome['status'] == 'Normal'

    def test_trace_fuel_exhausted(self):
        code, lines, _ = run('trace', '-e', 'Y true', '--fuel', '3')
        assert code == EXIT_FUEL_EXHAUSTED
        assert len(lines) == 4
        assert lines[-1].startswith('FUEL EXHAUSTED after 3 steps\t')

    def test_parse_prints_canonical_form(self):
        assert run('parse', '-e', 'H   true')[1] == ['<H> <true>']
        assert run('parse', '-e', 'b + a', '--no-prelude')[1] == ['a + b']

    def test_parse_machine(self):
        _, lines, _ = run('parse', '-e', 'true', '--format', 'machine')
        assert json.loads(lines[0]) == {'term': '<true>'}


class TestCheck:
    """lambdalin check"""

    def test_suite_failure_exit_code(self, mocker):
        report = SuiteReport('demo')
        report.add(CaseResult('broken', False, 'why'))
        mocker.patch('src.cli.commands.run_checks', return_value=CheckRun([report.finish()]))
        code, lines, err = run('check', '--samples', '0')
        assert code == EXIT_SUITE_FAILURE
        assert lines[-1].startswith('FAILED')
        assert 'property check(s) failed' in err

    def test_seeds_and_samples_reach_the_harness(self, mocker):
        checks = mocker.patch('src.cli.commands.run_checks', return_value=CheckRun())
        code, lines, _ = run('check', '--samples', '12', '--seed', '4', '--fuel', '99')
        assert code == EXIT_OK
        assert lines == ['OK']
        args = checks.call_args.args
        assert args[0].seed == 4
        assert args[1:4] == (99, 12, [4, 5, 6])

    @pytest.mark.slow
    def test_real_suites_pass(self):
        code, lines, _ = run('check', '--samples', '50', '--fuel', '500')
        assert code == EXIT_OK
        assert lines[-1] == 'OK'

    @pytest.mark.slow
    def test_unrestricted_factorisation_fails(self):
        code, lines, _ = run('check', '--samples', '0', '--unrestricted-factorization')
        assert code == EXIT_SUITE_FAILURE
        assert any(line.startswith('FAIL\trestrictions\texample-1/no-factor') for line in lines)


class TestUsage:
    """Argument errors exit with status 1"""

    @pytest.mark.parametrize("argv", [
        [],
        ['normalize'],
        ['normalize', '-e', 'a', '-f', 'b.lal'],
        ['normalize', '-e', 'a', '--fuel', '-1'],
        ['normalize', '-e', 'a', '--format', 'xml'],
        ['repl', '-e', 'a'],
        ['simplify', '-e', 'a'],
    ])
    def test_usage_errors(self, argv):
        code, lines, err = run(*argv)
        assert code == EXIT_USAGE
        assert lines == []
        assert err.startswith('error:')

    def test_invalid_environment(self, clean_env):
        clean_env.setenv('LAMBDALIN_FUEL', 'lots')
        code, _, err = run('normalize', '-e', 'true')
        assert code == EXIT_USAGE
        assert 'LAMBDALIN_FUEL' in err

    def test_cli_config_validation(self):
        with pytest.raises(ConfigurationException):
            CliConfig('check', expression='a')
        with pytest.raises(ConfigurationException):
            CliConfig('normalize')
        assert CliConfig('check', seed=10).seeds == [10, 11, 12]

    def test_parser_defaults(self):
        args = build_parser().parse_args(['normalize', '-e', 'a'])
        assert args.fuel is None
        assert args.format == 'text'
        assert not args.no_prelude


class TestRepl:
    """Scripted REPL sessions"""

    def session(self, *lines):
        out = io.StringIO()
        runner = CommandRunner(CliConfig('repl'), out=out)
        script = iter(lines)

        def scripted(prompt):
            try:
                return next(script)
            except StopIteration:
                raise EOFError

        assert Repl(runner, input_fn=scripted).run() == EXIT_OK
        return out.getvalue().splitlines()

    def test_bindings_and_terms(self):
        assert self.session("let u = \\x.x;", "u true") == ['u defined', '<true>']

    def test_equality_directive(self):
        assert self.session(":eq H (H true) = true", ":eq Not true = true") == ['true', 'false']

    def test_equality_needs_a_normal_form(self):
        assert self.session(":fuel 10", ":eq Y true = true") == ['fuel 10', 'unknown: fuel exhausted']

    def test_trace_directive(self):
        lines = self.session(":trace on", "{[true]}")
        assert lines == ['trace on', '1\tB-Beta\t-\t<true>', 'Normal\t<true>']

    def test_fuel_directive(self):
        lines = self.session(":fuel 5", "Y true")
        assert lines[:2] == ['fuel 5', 'FUEL EXHAUSTED after 5 steps']

    def test_errors_keep_the_session_alive(self):
        lines = self.session("(a", ":bogus", ":fuel -2", "true")
        assert lines[0].startswith('error: 1:3')
        assert lines[1:3] == ['(a', '  ^']
        assert lines[3].startswith('error: Unknown directive :bogus')
        assert lines[4].startswith('error: :fuel')
        assert lines[5] == '<true>'

    def test_names_directive(self):
        assert self.session(":names off", "Not true") == ['names off', '\\x.\\y.y']

    def test_quit_stops_reading(self):
        assert self.session(":quit", "true") == []

    def test_comments_and_blank_lines(self):
        assert self.session("", "# nothing", "false") == ['<false>']

    def test_started_from_main(self, mocker):
        mocker.patch('builtins.input', side_effect=[':help', EOFError()])
        code, lines, _ = run('repl')
        assert code == EXIT_OK
        assert any(':quit' in line for line in lines)
