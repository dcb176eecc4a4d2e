import socket

import pytest


@pytest.fixture(autouse=True)
def no_network(monkeypatch):
    """Nothing in the suite may open a connection; probes run on fixtures."""

    def refuse(*args, **kwargs):
        raise AssertionError("test attempted network access")

    monkeypatch.setattr(socket.socket, "connect", refuse)
    monkeypatch.setattr(socket, "create_connection", refuse)
