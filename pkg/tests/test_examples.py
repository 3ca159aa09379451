"""Tests for all examples."""

import os
import subprocess
import sys

ROOT_DIRECTORY = os.path.join(os.path.dirname(__file__), '..')


def run_example(name, *args):
    """Run an example script and return its decoded stdout."""
    path = os.path.join(ROOT_DIRECTORY, name)
    stdout = subprocess.check_output([sys.executable, path] + list(args))
    return stdout.decode('ascii')


def test_werner_fringes():
    """Test example_werner_fringes.py with the default splitter."""
    stdout_split = run_example('example_werner_fringes.py', 'print', '-n', '5').splitlines()
    assert 'N_Da oracle' in stdout_split[1]
    rows = [[c.strip() for c in line.strip('|').split('|')] for line in stdout_split[3:-1]]
    assert 5 == len(rows)
    # Columns: dphi, closed Da, closed Db, oracle Da, oracle Db. delta = 0.3, C = 1, A = 0.5.
    for row in rows:
        assert row[1] == row[3]
        assert row[2] == row[4]
    assert ['0.0000', '0.522332', '0.977668', '0.522332', '0.977668'] == rows[0]


def test_werner_fringes_bad_amplitude():
    """Test example_werner_fringes.py refusing A > C."""
    path = os.path.join(ROOT_DIRECTORY, 'example_werner_fringes.py')
    proc = subprocess.Popen([sys.executable, path, 'print', '-a', '2'], stdout=subprocess.PIPE,
                            stderr=subprocess.PIPE)
    stdout, stderr = proc.communicate()
    assert 1 == proc.returncode
    assert not stdout
    assert stderr.decode('ascii').startswith('ERROR: ')


def test_homotopy_classes():
    """Test example_homotopy_classes.py."""
    stdout = run_example('example_homotopy_classes.py', 'print')
    classes = dict()
    for line in stdout.splitlines()[3:-1]:
        cells = [c.strip() for c in line.strip('|').split('|')]
        classes[cells[0]] = (int(cells[2]), cells[3], cells[4])
    assert (0, '+start', 'trivial') == classes['no rotation']
    assert (1, '-start', 'nontrivial') == classes['2 pi about z']
    assert (2, '+start', 'trivial') == classes['4 pi about z']
    assert (1, '-start', 'nontrivial') == classes['2 pi about x + y + z']
    assert (0, '+start', 'trivial') == classes['pi about x, then back']
    assert (2, '+start', 'trivial') == classes['two jumps through the surface']
