import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

import pytest

from acyclic_coloring.cli import EXIT_CORRUPT, EXIT_ERROR, EXIT_OK, EXIT_STEP_CAP, main
from acyclic_coloring.graph.generators import cycle_graph
from acyclic_coloring.oracle.verify import verify_acyclic

# pytest tests/test_cli.py::TestRunCommand -v -s
# pytest tests/test_cli.py::TestAnalyzeCommand::test_dyck -v -s

C6 = ['--family', 'cycle', '--n', '6']


def csv_lines(out: str):
    return [line for line in out.strip().splitlines() if line]


@pytest.fixture
def isolated(tmp_path, monkeypatch):
    """Run from an empty directory so no config/config.yaml is picked up from cwd."""
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv('ACRC_SEED', raising=False)
    return tmp_path


class TestRunCommand:
    def test_run_json(self, isolated, capsys):
        assert main(['run', *C6, '--seed', '1', '--json']) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report['kappa'] == '63/50'
        assert report['delta'] == 2
        assert report['terminated'] is True
        assert len(report['coloring']) == 6
        assert verify_acyclic(cycle_graph(6), report['coloring']).acyclic
        assert report['colors_used'] <= report['palette']

    def test_run_plain_text(self, isolated, capsys):
        assert main(['run', *C6, '--seed', '1']) == EXIT_OK
        out = capsys.readouterr().out
        assert 'terminated: True' in out
        assert not any(line.startswith('coloring:') for line in out.splitlines())

    def test_seed_from_environment(self, isolated, capsys, monkeypatch):
        monkeypatch.setenv('ACRC_SEED', '1')
        assert main(['run', *C6, '--json']) == EXIT_OK
        from_env = json.loads(capsys.readouterr().out)
        assert main(['run', *C6, '--seed', '1', '--json']) == EXIT_OK
        explicit = json.loads(capsys.readouterr().out)
        assert from_env['seed'] == 1
        assert from_env['coloring'] == explicit['coloring']

    def test_step_cap(self, isolated, capsys):
        assert main(['run', *C6, '--seed', '1', '--step-cap', '1', '--json']) == EXIT_STEP_CAP
        report = json.loads(capsys.readouterr().out)
        assert report['terminated'] is False
        assert report['steps'] == 1

    def test_run_from_dimacs_file(self, isolated, capsys, corpus):
        path = isolated / 'k4.col'
        path.write_text(corpus['k4']['dimacs'], encoding='utf-8')
        assert main(['run', '--graph', str(path), '--seed', '3', '--json']) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report['source'] == str(path)
        assert report['palette'] == 15
        assert sorted(report['coloring']) == sorted(set(report['coloring']))


class TestReplayCommand:
    def emit(self, tmp_path, capsys):
        record, coloring = tmp_path / 'run.acrc', tmp_path / 'run.json'
        code = main(['run', *C6, '--seed', '2', '--json', '--emit-record', str(record), '--emit-coloring', str(coloring)])
        assert code == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        return record, coloring, report

    def test_replay_round_trip(self, isolated, capsys):
        record, coloring, report = self.emit(isolated, capsys)
        assert json.loads(coloring.read_text(encoding='utf-8')) == report['coloring']
        assert record.read_bytes().startswith(b'ACRC1')

        assert main(['replay', *C6, '--coloring', str(coloring), '--record', str(record)]) == EXIT_OK
        rows = csv_lines(capsys.readouterr().out)
        assert rows[0] == 'step,vertex,color,kind,identifier'
        assert len(rows) == report['steps'] + 1
        assert rows[1].startswith('1,1,')

    def test_corrupted_record(self, isolated, capsys):
        record, coloring, _ = self.emit(isolated, capsys)
        data = record.read_bytes()
        record.write_bytes(b'XXXXX' + data[5:])
        assert main(['replay', *C6, '--coloring', str(coloring), '--record', str(record)]) == EXIT_CORRUPT
        assert 'record corrupted' in capsys.readouterr().err

        record.write_bytes(data[: len(data) // 2])
        assert main(['replay', *C6, '--coloring', str(coloring), '--record', str(record)]) == EXIT_CORRUPT

    def test_record_for_another_graph(self, isolated, capsys):
        record, _, _ = self.emit(isolated, capsys)
        other = isolated / 'c8.json'
        other.write_text(json.dumps([1, 2, 1, 2, 1, 2, 1, 3]), encoding='utf-8')
        args = ['replay', '--family', 'cycle', '--n', '8', '--coloring', str(other), '--record', str(record)]
        assert main(args) == EXIT_CORRUPT
        assert 'n=6' in capsys.readouterr().err

    def test_random_family_is_rebuilt_from_the_record_seed(self, isolated, capsys):
        family = ['--family', 'random_regular', '--n', '60', '--d', '8']
        record, coloring = isolated / 'rr.acrc', isolated / 'rr.json'
        run = ['run', *family, '--seed', '1', '--json', '--emit-record', str(record), '--emit-coloring', str(coloring)]
        assert main(run) == EXIT_OK
        report = json.loads(capsys.readouterr().out)

        replay = ['replay', *family, '--coloring', str(coloring), '--record', str(record)]
        assert main(replay) == EXIT_OK
        rows = csv_lines(capsys.readouterr().out)
        assert len(rows) == report['steps'] + 1
        uncolored = [row for row in rows[1:] if ',uncolored,' in row]
        assert len(uncolored) == report['uncolorings']
        assert uncolored == ['54,54,26,uncolored,19 25 36', '61,59,3,uncolored,24 58 27']

        assert main([*replay, '--graph-seed', '1']) == EXIT_OK
        assert csv_lines(capsys.readouterr().out) == rows

    def test_same_sized_random_graph_is_rejected(self, isolated, capsys):
        family = ['--family', 'random_regular', '--n', '60', '--d', '8']
        record, coloring = isolated / 'rr.acrc', isolated / 'rr.json'
        run = ['run', *family, '--seed', '1', '--emit-record', str(record), '--emit-coloring', str(coloring)]
        assert main(run) == EXIT_OK
        capsys.readouterr()

        replay = ['replay', *family, '--graph-seed', '2', '--coloring', str(coloring), '--record', str(record)]
        assert main(replay) == EXIT_CORRUPT
        captured = capsys.readouterr()
        assert captured.out == ''
        assert 'record corrupted' in captured.err


class TestVerifyCommand:
    @pytest.mark.parametrize(
        'colors, code, acyclic',
        [
            ([1, 2, 1, 2], EXIT_ERROR, False),
            ([1, 2, 1, 3], EXIT_OK, True),
            ([1, 1, 2, 3], EXIT_ERROR, False),
        ],
    )
    def test_verify(self, isolated, capsys, colors, code, acyclic):
        path = isolated / 'coloring.json'
        path.write_text(json.dumps(colors), encoding='utf-8')
        assert main(['verify', '--family', 'cycle', '--n', '4', '--coloring', str(path)]) == code
        assert json.loads(capsys.readouterr().out)['acyclic'] is acyclic

    def test_partial_coloring_is_an_input_error(self, isolated, capsys):
        path = isolated / 'coloring.json'
        path.write_text('[1, 2, null, 3]', encoding='utf-8')
        assert main(['verify', '--family', 'cycle', '--n', '4', '--coloring', str(path)]) == EXIT_ERROR
        assert capsys.readouterr().out == ''


class TestAnalyzeCommand:
    def test_dyck(self, isolated, capsys):
        assert main(['analyze', 'dyck', '--t-max', '8']) == EXIT_OK
        rows = csv_lines(capsys.readouterr().out)
        assert rows[0] == 't,count,ratio'
        assert len(rows) == 9
        assert rows[2].startswith('2,1,')
        assert rows[-1].startswith('8,55,')

    def test_bounds(self, isolated, capsys):
        assert main(['analyze', 'bounds', '--family', 'complete', '--n', '4']) == EXIT_OK
        rows = csv_lines(capsys.readouterr().out)
        assert rows[0] == 'vertex,k,size,bound,margin,holds'
        assert len(rows) == 5
        assert all(row.split(',')[1:3] == ['2', '3'] and row.endswith(',true') for row in rows[1:])

    def test_bench(self, isolated, capsys):
        assert main(['analyze', 'bench', *C6, '--trials', '3', '--seed', '5']) == EXIT_OK
        rows = csv_lines(capsys.readouterr().out)
        assert rows[0] == 'trial,seed,t,U_t,colors_used,record_bits,t_log2_l,status'
        assert len(rows) == 4
        assert [row.split(',')[0] for row in rows[1:]] == ['0', '1', '2']
        assert all(row.endswith(',terminated') for row in rows[1:])

    def test_bench_explicit_seeds_and_report(self, isolated, capsys):
        args = ['analyze', 'bench', *C6, '--seeds', '7', '8', '--report-dir', str(isolated / 'reports')]
        assert main(args) == EXIT_OK
        rows = csv_lines(capsys.readouterr().out)
        assert [row.split(',')[1] for row in rows[1:]] == ['7', '8']
        assert any((isolated / 'reports').iterdir())

    def test_compare(self, isolated, capsys):
        assert main(['analyze', 'compare', *C6, '--seed', '1']) == EXIT_OK
        rows = [row.split(',') for row in csv_lines(capsys.readouterr().out)]
        assert rows[0] == ['method', 'colors_used', 'acyclic']
        by_method = {row[0]: (int(row[1]), row[2]) for row in rows[1:]}
        assert by_method['exact'] == (3, 'true')
        assert by_method['square_greedy'] == (3, 'true')
        assert by_method['algorithm'][1] == 'true'
        assert by_method['algorithm'][0] >= 3

    def test_compare_respects_the_exact_size_limit(self, isolated, capsys):
        assert main(['analyze', 'compare', *C6, '--seed', '1', '--max-n', '5']) == EXIT_OK
        captured = capsys.readouterr()
        assert [row.split(',')[0] for row in csv_lines(captured.out)[1:]] == ['algorithm', 'square_greedy']
        assert 'limited to 5 vertices' in captured.err

        config = isolated / 'config.yaml'
        config.write_text('oracle:\n  brute_force_max_n: 4\n', encoding='utf-8')
        assert main(['--config', str(config), 'analyze', 'compare', *C6, '--seed', '1']) == EXIT_OK
        assert 'exact' not in capsys.readouterr().out


class TestUsage:
    @pytest.mark.parametrize(
        'argv',
        [
            [],
            ['run'],
            ['run', '--graph', 'g.col', *C6],
            ['run', *C6, '--kappa', 'abc'],
            ['run', *C6, '--mode', 'loose'],
            ['run', *C6, '--step-cap', '0'],
            ['analyze'],
            ['analyze', 'dyck', '--t-max', '-1'],
            ['--config', 'missing.yaml', 'analyze', 'dyck', '--t-max', '2'],
        ],
    )
    def test_usage_errors(self, isolated, capsys, argv):
        assert main(argv) == EXIT_ERROR
        assert '[ERROR]' in capsys.readouterr().err

    def test_missing_graph_file(self, isolated, capsys):
        assert main(['run', '--graph', str(isolated / 'absent.col')]) == EXIT_ERROR

    def test_config_file_sets_defaults(self, isolated, capsys):
        config = isolated / 'config.yaml'
        config.write_text('algorithm:\n  kappa: 2\n', encoding='utf-8')
        assert main(['--config', str(config), 'run', *C6, '--seed', '1', '--json']) == EXIT_OK
        assert json.loads(capsys.readouterr().out)['kappa'] == '2/1'
