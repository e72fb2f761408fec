from chisynth.cli.app import app

__all__ = ["app"]
