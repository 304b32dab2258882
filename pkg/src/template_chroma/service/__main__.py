"""Run the service: python -m template_chroma.service [--host ADDR] [--port N]"""

import argparse

import uvicorn

from .app import app


def run() -> None:
    parser = argparse.ArgumentParser(prog="template-chroma-service")
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=8000)
    args = parser.parse_args()
    uvicorn.run(app, host=args.host, port=args.port)


if __name__ == "__main__":
    run()
