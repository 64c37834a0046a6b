"""
Tests for configuration, logging setup and the error handler
"""

import json
import logging

import pytest

from src.config import DEFAULT_FUEL, Config
from src.exceptions import (
    ConfigurationException, InvalidRedexError, ParseError, PreludeLoadException,
    SuiteFailureException,
)
from src.logger import get_logger, setup_logger
from src.utils import EXIT_OK, EXIT_SUITE_FAILURE, EXIT_USAGE, ErrorHandler


class TestConfig:
    """LAMBDALIN_* environment and lambdalin.json"""

    def test_defaults(self, clean_env, tmp_path):
        config = Config(str(tmp_path / 'absent.json'))
        assert config.fuel == DEFAULT_FUEL
        assert config.seed == 0
        assert config.log_level == 'WARNING'
        assert config.prelude_path is None
        assert config.get_check_config()['restriction_seeds'] == 5

    def test_environment(self, clean_env, tmp_path):
        clean_env.setenv('LAMBDALIN_FUEL', '250')
        clean_env.setenv('LAMBDALIN_SEED', '42')
        clean_env.setenv('LAMBDALIN_LOG_LEVEL', 'debug')
        clean_env.setenv('LAMBDALIN_PRELUDE', '/tmp/custom.lal')
        config = Config(str(tmp_path / 'absent.json'))
        assert config.fuel == 250
        assert config.seed == 42
        assert config.log_level == 'DEBUG'
        assert config.prelude_path == '/tmp/custom.lal'

    @pytest.mark.parametrize("key,value", [
        ('LAMBDALIN_FUEL', 'many'),
        ('LAMBDALIN_FUEL', '-5'),
        ('LAMBDALIN_SAMPLES', '-1'),
        ('LAMBDALIN_SEED', '1.5'),
    ])
    def test_invalid_environment(self, clean_env, tmp_path, key, value):
        clean_env.setenv(key, value)
        with pytest.raises(ConfigurationException) as exc_info:
            Config(str(tmp_path / 'absent.json'))
        assert exc_info.value.details['config_key'] == key

    def test_file_overrides_merge_with_defaults(self, clean_env, tmp_path):
        path = tmp_path / 'lambdalin.json'
        path.write_text(json.dumps({'generator': {'max_depth': 3}, 'check': {'pair_fuel': 50}}))
        config = Config(str(path))
        generator = config.get_generator_config()
        assert generator['max_depth'] == 3
        assert generator['closed_only'] is True
        assert config.get_check_config()['pair_fuel'] == 50
        assert config.get_check_config()['restriction_fuel'] == 1_000

    def test_invalid_json(self, clean_env, tmp_path):
        path = tmp_path / 'lambdalin.json'
        path.write_text("{not json")
        with pytest.raises(ConfigurationException):
            Config(str(path))

    def test_save_config(self, clean_env, tmp_path):
        path = tmp_path / 'lambdalin.json'
        config = Config(str(path))
        config.generator['max_depth'] = 7
        config.save_config()
        assert json.loads(path.read_text())['generator']['max_depth'] == 7
        assert Config(str(path)).get_generator_config()['max_depth'] == 7


class TestLogger:
    """colorlog console handler plus optional rotating file"""

    def test_console_only(self):
        logger = setup_logger('lambdalin-test', 'INFO')
        assert logger.level == logging.INFO
        assert len(logger.handlers) == 1
        assert not logger.propagate

    def test_with_file(self, tmp_path):
        log_file = tmp_path / 'logs' / 'lambdalin.log'
        logger = setup_logger('lambdalin-test-file', 'DEBUG', str(log_file))
        assert len(logger.handlers) == 2
        logger.info("hello")
        for handler in logger.handlers:
            handler.flush()
        assert 'hello' in log_file.read_text()

    def test_repeated_setup_does_not_duplicate_handlers(self):
        setup_logger('lambdalin-test-twice', 'INFO')
        assert len(setup_logger('lambdalin-test-twice', 'INFO').handlers) == 1

    def test_child_loggers(self):
        assert get_logger('engine').name == 'lambdalin.engine'


class TestErrorHandler:
    """Exception to exit-code mapping"""

    @pytest.mark.parametrize("error,code", [
        (ParseError("bad token"), EXIT_USAGE),
        (InvalidRedexError("no match"), EXIT_USAGE),
        (ConfigurationException("bad flag"), EXIT_USAGE),
        (PreludeLoadException('p.lal', 'missing'), EXIT_USAGE),
        (SuiteFailureException(2, ['restrictions']), EXIT_SUITE_FAILURE),
        (FileNotFoundError('absent.lal'), EXIT_USAGE),
        (RuntimeError('boom'), EXIT_USAGE),
    ])
    def test_exit_codes(self, error, code):
        assert ErrorHandler().handle_error(error) == code
        assert code != EXIT_OK

    def test_history_and_summary(self):
        handler = ErrorHandler(history_limit=3)
        for _ in range(4):
            handler.handle_error(ParseError("bad"))
        handler.handle_error(SuiteFailureException(1))
        summary = handler.get_error_summary()
        assert summary['total_errors'] == 3
        assert summary['error_counts'] == {'ParseError': 2, 'SuiteFailureException': 1}
        assert summary['most_recent']['type'] == 'SuiteFailureException'

    def test_callbacks(self, mocker):
        handler = ErrorHandler()
        callback = mocker.Mock()
        handler.register_callback(SuiteFailureException, callback)
        error = SuiteFailureException(1)
        handler.handle_error(error, {'suite': 'demo'})
        callback.assert_called_once_with(error, {'suite': 'demo'})

    def test_failing_callback_is_contained(self, mocker):
        handler = ErrorHandler()
        handler.register_callback(ParseError, mocker.Mock(side_effect=RuntimeError('oops')))
        assert handler.handle_error(ParseError("bad")) == EXIT_USAGE
