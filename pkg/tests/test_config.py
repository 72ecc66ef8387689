import pytest

from primroot.config import (
    BoundConfig,
    BurgessConstant,
    dumps_config,
    load_config,
    loads_config,
    parse_integer,
    save_config,
)
from primroot.errors import ConfigError

MINIMAL = """
[burgess.2]
value = 2.5
provenance = "test value"
"""


def test_defaults():
    cfg = BoundConfig()
    assert cfg.pv_reference_prime == 2_500_000_000_000_000
    assert cfg.verified_cutoff == 2_500_000_000_000_000
    assert cfg.robin_constant == 2.8973
    assert cfg.enumeration_threshold == 100_000
    assert all(c.provenance for c in cfg.burgess_constants.values())


def test_optional_sections_default():
    cfg = loads_config(MINIMAL)
    assert cfg.burgess(2) == 2.5
    assert cfg.pv_reference_prime == 2_500_000_000_000_000
    assert cfg.robin_constant == 2.8973
    assert cfg.enumeration_threshold == 100_000


def test_scientific_integers():
    cfg = loads_config('verified_cutoff = "2.5e15"\nenumeration_threshold = "1e5"\n' + MINIMAL)
    assert cfg.verified_cutoff == 2_500_000_000_000_000
    assert cfg.enumeration_threshold == 100_000
    assert parse_integer("1e7") == 10**7
    assert parse_integer(2.5e15) == 2_500_000_000_000_000
    with pytest.raises(ConfigError):
        parse_integer("2.5")
    with pytest.raises(ConfigError):
        parse_integer("abc")


def test_missing_c2_is_an_error():
    with pytest.raises(ConfigError, match="C\\(2\\)"):
        loads_config('[burgess.3]\nvalue = 1.0\nprovenance = "x"\n')
    with pytest.raises(ConfigError):
        loads_config("")


def test_bad_constants():
    with pytest.raises(ConfigError):
        loads_config('[burgess.2]\nvalue = -1.0\nprovenance = "x"\n')
    with pytest.raises(ConfigError):
        loads_config('[burgess.2]\nvalue = 1.0\nprovenance = ""\n')
    with pytest.raises(ConfigError):
        loads_config('[burgess.2]\nvalue = 1.0\n')
    with pytest.raises(ConfigError):
        loads_config("robin_constant = 0\n" + MINIMAL)
    with pytest.raises(ConfigError):
        loads_config("unknown = 1\n" + MINIMAL)


def test_malformed_file_reports_line(tmp_path):
    path = tmp_path / "bad.toml"
    path.write_text(MINIMAL + "\nrobin_constant = = 3\n")
    with pytest.raises(ConfigError, match="line 6"):
        load_config(path)
    with pytest.raises(ConfigError):
        load_config(tmp_path / "missing.toml")


def test_round_trip(tmp_path):
    cfg = BoundConfig().with_burgess(4, 3.5, "made up for the test")
    path = tmp_path / "c.toml"
    save_config(cfg, path)
    again = load_config(path)
    assert again == cfg
    assert again.digest() == cfg.digest()
    assert dumps_config(again) == dumps_config(cfg)


def test_digest_changes_with_constants():
    a = BoundConfig()
    b = a.with_burgess(2, 2.7, "other")
    assert a.digest() != b.digest()
    with pytest.raises(ConfigError):
        BoundConfig({3: BurgessConstant(1.0, "x")})
