"""
Test environment settings and subset mappers
"""

import sys
from pathlib import Path

import pytest

# Add golod module to path
sys.path.insert(0, str(Path(__file__).parent.parent / "golod"))

from parallel import PoolMapper, SerialMapper, create_mapper, resolve_mapper
from settings import AnalysisSettings, create_settings_from_env


def square(x):
    return x * x


class TestCreateSettingsFromEnv:
    """Test reading caps and worker counts from the environment."""

    def test_defaults(self):
        settings = create_settings_from_env({})
        assert settings.hochster_max_m == 24
        assert settings.pair_scan_limit == 3 ** 14
        assert settings.oracle_max_m == 12
        assert settings.threads >= 1
        assert settings.log_level == "WARNING"
        assert not settings.force

    def test_overrides_from_env(self):
        settings = create_settings_from_env({
            "GOLOD_THREADS": "3",
            "GOLOD_HOCHSTER_MAX_M": "10",
            "GOLOD_PAIR_SCAN_LIMIT": "0x100",
            "GOLOD_ORACLE_MAX_M": "8",
            "GOLOD_LOG_LEVEL": "debug",
        })
        assert settings.threads == 3
        assert settings.hochster_max_m == 10
        assert settings.pair_scan_limit == 256
        assert settings.oracle_max_m == 8
        assert settings.log_level == "DEBUG"

    def test_blank_values_use_defaults(self):
        assert create_settings_from_env({"GOLOD_HOCHSTER_MAX_M": " "}).hochster_max_m == 24

    @pytest.mark.parametrize("name,value", [
        ("GOLOD_THREADS", "many"),
        ("GOLOD_THREADS", "0"),
        ("GOLOD_HOCHSTER_MAX_M", "-1"),
        ("GOLOD_ORACLE_MAX_M", "1.5"),
        ("GOLOD_LOG_LEVEL", "LOUD"),
    ])
    def test_malformed_values_name_the_variable(self, name, value):
        with pytest.raises(ValueError, match=name):
            create_settings_from_env({name: value})

    def test_with_overrides(self):
        base = AnalysisSettings(threads=4)
        assert base.with_overrides().threads == 4
        changed = base.with_overrides(threads=1, force=True)
        assert changed.threads == 1
        assert changed.force
        assert not base.force


class TestMappers:
    """Test serial and pooled subset mappers."""

    def test_serial_keeps_order(self):
        assert SerialMapper().map(square, [3, 1, 2]) == [9, 1, 4]

    def test_create_serial(self):
        assert isinstance(create_mapper(1), SerialMapper)
        assert isinstance(create_mapper(0), SerialMapper)

    def test_resolve(self):
        assert isinstance(resolve_mapper(None), SerialMapper)
        mapper = SerialMapper()
        assert resolve_mapper(mapper) is mapper

    @pytest.mark.integration
    def test_pool_keeps_order(self):
        with PoolMapper(2, chunksize=2) as mapper:
            assert mapper.map(square, range(20)) == [x * x for x in range(20)]
        # closed pools fall back to serial evaluation
        assert mapper.map(square, [5, 6]) == [25, 36]


if __name__ == "__main__":
    pytest.main([__file__])
