#!/usr/bin/env python
"""
Test runner script for the T cell repertoire simulator.

This script provides convenient commands to run different selections of
the test suite.
"""

import sys
import subprocess
import argparse
from pathlib import Path

# Add the project root to the Python path
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))


def run_command(command, description):
    """
    Run a command and display the result.

    Args:
        command: Command to run
        description: Description of what the command does
    """
    print(f"\n{'='*60}")
    print(f"Running: {description}")
    print(f"Command: {' '.join(command)}")
    print(f"{'='*60}")

    try:
        result = subprocess.run(command, check=True, capture_output=True, text=True, cwd=project_root)
        print(result.stdout)
        if result.stderr:
            print("STDERR:", result.stderr)
        return True
    except subprocess.CalledProcessError as e:
        print(f"Command failed with exit code {e.returncode}")
        print("STDOUT:", e.stdout)
        print("STDERR:", e.stderr)
        return False


def pytest_command(*args):
    return [sys.executable, '-m', 'pytest', *args, '-v']


SELECTIONS = {
    'all': (pytest_command('tests/'), "All Tests (slow tests excluded)"),
    'unit': (pytest_command('tests/unit/'), "Unit Tests (Domain, Services, Use Cases, Infrastructure)"),
    'integration': (pytest_command('tests/integration/'), "Integration Tests (CLI, Engine Agreement)"),
    'domain': (pytest_command('tests/unit/core/'), "Domain Layer Tests (Entities, Value Objects, Rates)"),
    'services': (pytest_command('tests/unit/services/'), "Service Tests (ODE, ABM, Analysis)"),
    'usecase': (pytest_command('tests/unit/usecases/'), "Use Case Tests"),
    'infrastructure': (pytest_command('tests/unit/infrastructure/'), "Infrastructure Tests (Result Repository)"),
    'slow': (pytest_command('tests/', '-m', 'slow'), "Slow Acceptance Tests (full-horizon ensembles)"),
    'full': (pytest_command('tests/', '-m', ''), "Every Test, Slow Ones Included"),
}


def main():
    """Main function to run tests based on command line arguments."""
    parser = argparse.ArgumentParser(description='T cell simulator test runner')
    parser.add_argument(
        'test_type',
        nargs='?',
        default='all',
        choices=sorted(SELECTIONS),
        help='Selection of tests to run'
    )
    parser.add_argument(
        '--specific',
        type=str,
        help='Run a specific test file or function'
    )

    args = parser.parse_args()

    print("T cell simulator test runner")
    print("=" * 60)

    if args.specific:
        success = run_command(pytest_command(args.specific), f"Specific Test: {args.specific}")
    else:
        command, description = SELECTIONS[args.test_type]
        success = run_command(command, description)

    if success:
        print(f"\n{'='*60}")
        print("✓ All tests completed successfully!")
        print(f"{'='*60}")
    else:
        print(f"\n{'='*60}")
        print("✗ Some tests failed!")
        print(f"{'='*60}")
        sys.exit(1)


if __name__ == '__main__':
    main()
