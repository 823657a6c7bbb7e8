class ZeitlinError(Exception):
    pass


class InvalidSize(ZeitlinError, ValueError):
    pass


class DegenerateInput(ZeitlinError, ValueError):
    pass


class QuadratureError(ZeitlinError, ValueError):
    pass


class InsufficientData(ZeitlinError, ValueError):
    pass


class FileFormatError(ZeitlinError, ValueError):
    """An input file exists but is not in the expected format."""


class SnapshotFormatError(FileFormatError):
    pass


class NoiseModelFormatError(FileFormatError):
    pass


class BlowUp(ZeitlinError):
    """
    Raised when a trajectory produces non-finite values or its Frobenius
    norm exceeds the configured multiple of the initial norm.
    """

    def __init__(self, message, time, step, state, trajectory=None):
        super(BlowUp, self).__init__(message)
        self.time = time
        self.step = step
        self.state = state
        self.trajectory = trajectory


class PipelineError(ZeitlinError):
    def __init__(self, stage, message):
        super(PipelineError, self).__init__('%s: %s' % (stage, message))
        self.stage = stage
