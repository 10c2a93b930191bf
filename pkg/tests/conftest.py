import pytest


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", default=False,
        help="run long statistical studies")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long statistical study (needs --slow)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return

    skip = pytest.mark.skip(reason="long statistical study, run with --slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)
