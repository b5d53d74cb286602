"""End-to-end check of the real HTTP service with the CLI as its client."""

import socket
import subprocess
import sys
import time

import httpx
import pytest

from skewpoly.cli import main

RING = "GF(2^2); frobenius=1"


@pytest.fixture(scope="module")
def server():
    with socket.socket() as s:
        s.bind(("127.0.0.1", 0))
        port = s.getsockname()[1]
    proc = subprocess.Popen(
        [sys.executable, "-m", "skewpoly.cli", "serve", "--port", str(port)],
        stdout=subprocess.DEVNULL, stderr=subprocess.DEVNULL)
    url = f"http://127.0.0.1:{port}"
    try:
        for _ in range(100):
            try:
                if httpx.get(url + "/health", timeout=1).status_code == 200:
                    break
            except httpx.TransportError:
                time.sleep(0.1)
        else:
            raise RuntimeError("service did not come up")
        yield url
    finally:
        proc.terminate()
        proc.wait(timeout=10)


def test_remote_bound(server, capsys):
    rc = main(["--ring", RING, "--server", server, "bound", "X+1",
               "--verify"])
    out = capsys.readouterr().out
    assert rc == 0
    assert out.splitlines()[0] == "X^2 + (1)"


def test_remote_matches_inprocess(server, capsys):
    argv = ["--ring", RING, "--json", "factor", "X^2+1", "--seed", "3"]
    rc1 = main(argv + ["--server", server])
    remote = capsys.readouterr().out
    rc2 = main(argv)
    local = capsys.readouterr().out
    assert rc1 == rc2 == 0
    assert remote == local
