import logging
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

import pytest

from acyclic_coloring.config import AppConfig, find_config_file, load_config, load_yaml, seed_from_env
from acyclic_coloring.data.structures import PaletteMode
from acyclic_coloring.utils import GetLog

# pytest tests/test_config.py::TestConfig -v -s


class TestConfig:
    def test_defaults_without_file(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        cfg = load_config()
        assert cfg == AppConfig()
        assert cfg.algorithm.kappa == '1.0583'
        assert cfg.algorithm.mode == PaletteMode.SAFE
        assert cfg.bench.max_concurrent_trials == 4

    def test_explicit_file(self, tmp_path):
        path = tmp_path / 'custom.yaml'
        path.write_text('algorithm:\n  kappa: 63/50\n  mode: tight\nbench:\n  max_concurrent_trials: 2\n', encoding='utf-8')
        cfg = load_config(str(path))
        assert cfg.algorithm.kappa == '63/50'
        assert cfg.algorithm.mode == PaletteMode.TIGHT
        assert cfg.bench.max_concurrent_trials == 2
        assert cfg.log.level == 'info'

    def test_auto_discovery(self, tmp_path, monkeypatch):
        (tmp_path / 'config').mkdir()
        (tmp_path / 'config' / 'config.yaml').write_text('log:\n  level: debug\n', encoding='utf-8')
        monkeypatch.chdir(tmp_path)
        assert find_config_file() == str(tmp_path / 'config' / 'config.yaml')
        assert load_config().log.level == 'debug'

    def test_numeric_kappa_is_kept_as_text(self, tmp_path):
        path = tmp_path / 'c.yaml'
        path.write_text('algorithm:\n  kappa: 1.5\n', encoding='utf-8')
        assert load_config(str(path)).algorithm.kappa == '1.5'

    def test_missing_explicit_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            find_config_file(str(tmp_path / 'nope.yaml'))

    @pytest.mark.parametrize(
        'text',
        [
            'log:\n  level: loud\n',
            'algorithm:\n  kappa: -1\n',
            'algorithm:\n  step_cap_factor: 0\n',
            '- just\n- a list\n',
            'log: [unclosed\n',
        ],
    )
    def test_invalid_files(self, tmp_path, text):
        path = tmp_path / 'bad.yaml'
        path.write_text(text, encoding='utf-8')
        with pytest.raises(ValueError):
            load_config(str(path))

    def test_empty_yaml(self, tmp_path):
        path = tmp_path / 'empty.yaml'
        path.write_text('', encoding='utf-8')
        assert load_yaml(str(path)) == {}

    def test_seed_from_env(self, monkeypatch):
        monkeypatch.delenv('ACRC_SEED', raising=False)
        assert seed_from_env(3) == 3
        monkeypatch.setenv('ACRC_SEED', ' 007 ')
        assert seed_from_env() == 7
        monkeypatch.setenv('ACRC_SEED', 'seven')
        with pytest.raises(ValueError):
            seed_from_env()


class TestGetLog:
    def test_singleton_and_reset(self):
        first = GetLog.get_log('warning')
        assert GetLog.get_log('debug') is first
        names = [h.name for h in first.handlers]
        assert names.count('stream') == 1
        GetLog.reset()
        assert 'stream' not in [h.name for h in logging.getLogger().handlers]

    def test_rejects_unknown_level(self):
        with pytest.raises(ValueError):
            GetLog.get_log('loud')

    def test_save_locally(self, tmp_path):
        GetLog.get_log('info', save_locally=True, log_folder=str(tmp_path / 'logs'))
        logging.warning('disk check')
        for hdr in logging.getLogger().handlers:
            hdr.flush()
        assert 'disk check' in (tmp_path / 'logs' / 'log.log').read_text(encoding='utf-8')
        assert 'disk check' in (tmp_path / 'logs' / 'error.log').read_text(encoding='utf-8')
