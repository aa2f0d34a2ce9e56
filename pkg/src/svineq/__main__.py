"""Allow ``python -m svineq``."""

from .cli import entrypoint

if __name__ == "__main__":
    entrypoint()
