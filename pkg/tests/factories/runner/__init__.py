from .runner import RunnerFactory

__all__ = ("RunnerFactory",)
