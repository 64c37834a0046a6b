import os
import json
from typing import Dict, Any, Optional
from dotenv import load_dotenv

from .exceptions import ConfigurationException

# Load environment variables
load_dotenv()

DEFAULT_FUEL = 10_000
DEFAULT_SAMPLES = 1_000
CI_SAMPLES = 10_000


class Config:
    """Configuration manager for the lambdalin toolkit"""

    def __init__(self, config_file: str = "lambdalin.json"):
        self.config_file = config_file
        self._load_env_vars()
        self._load_config_file()

    def _load_env_vars(self):
        """Load environment variables"""
        self.prelude_path: Optional[str] = os.getenv('LAMBDALIN_PRELUDE') or None

        # Engine
        self.fuel = self._int_env('LAMBDALIN_FUEL', DEFAULT_FUEL)
        self.seed = self._int_env('LAMBDALIN_SEED', 0)
        self.samples = self._int_env('LAMBDALIN_SAMPLES', DEFAULT_SAMPLES)

        # Logging
        self.log_level = os.getenv('LAMBDALIN_LOG_LEVEL', 'WARNING').upper()
        self.log_file = os.getenv('LAMBDALIN_LOG_FILE') or None

        if self.fuel < 0:
            raise ConfigurationException("Fuel must be non-negative", config_key='LAMBDALIN_FUEL')
        if self.samples < 0:
            raise ConfigurationException("Sample count must be non-negative",
                                         config_key='LAMBDALIN_SAMPLES')

    @staticmethod
    def _int_env(key: str, default: int) -> int:
        raw = os.getenv(key)
        if raw is None or raw == '':
            return default
        try:
            return int(raw)
        except ValueError:
            raise ConfigurationException(f"{key} must be an integer, got {raw!r}", config_key=key)

    def _load_config_file(self):
        """Load configuration from JSON file if it exists"""
        if os.path.exists(self.config_file):
            try:
                with open(self.config_file, 'r') as f:
                    config_data = json.load(f)
            except json.JSONDecodeError as e:
                raise ConfigurationException(f"Invalid JSON in {self.config_file}: {e}")
            self.generator = config_data.get('generator', self._default_generator())
            self.check = config_data.get('check', self._default_check())
        else:
            self.generator = self._default_generator()
            self.check = self._default_check()

    @staticmethod
    def _default_generator() -> Dict[str, Any]:
        return {
            "max_depth": 5,
            "closed_only": True,
            "scalar_pool": ["0", "1", "-1", "1/2", "sqrt2/2", "i", "omega8"],
            "weights": {
                "zero": 1.0,
                "lambda": 3.0,
                "apply": 3.0,
                "scaled": 2.0,
                "sum": 2.0,
                "variable": 3.0,
            },
            "self_application_budget": 2,
        }

    @staticmethod
    def _default_check() -> Dict[str, Any]:
        return {
            "seeds": 3,
            "pair_fuel": 1_000,
            "restriction_fuel": 1_000,
            "restriction_seeds": 5,
        }

    def get_generator_config(self) -> Dict[str, Any]:
        """Get generator defaults merged over the built-in ones"""
        merged = self._default_generator()
        merged.update(self.generator)
        return merged

    def get_check_config(self) -> Dict[str, Any]:
        """Get suite defaults merged over the built-in ones"""
        merged = self._default_check()
        merged.update(self.check)
        return merged

    def save_config(self):
        """Save current configuration to file"""
        config_data = {
            "generator": self.generator,
            "check": self.check
        }
        with open(self.config_file, 'w') as f:
            json.dump(config_data, f, indent=2)
