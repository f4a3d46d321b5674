"""Exception types raised by the construction pipeline."""

__all__ = ["ConvergenceError", "StageError"]


class ConvergenceError(RuntimeError):
    """An iterative stage failed to converge or lost its bracket."""


class StageError(RuntimeError):
    """A pipeline stage failed; carries the stage name for diagnostics."""

    def __init__(self, stage: str, message: str):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage
