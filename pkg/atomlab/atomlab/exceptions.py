'''
These are the sorts of exceptions atomlab raises, beyond the basic
Python ones.

Precondition failures at the field level (a non-prime characteristic,
inverting zero) use `ValueError` and `ZeroDivisionError`, like the rest
of the numeric stack. Everything here is about rings, caps, and our own
consistency checks.
'''

import datetime
import traceback


class AtomlabException(Exception):
    '''
    Base class, so callers (mostly the CLI) can catch everything we
    raise on purpose in one place.
    '''


class CapExceeded(AtomlabException):
    '''
    A computation would exceed a configured size cap, e.g. a field
    larger than `field_size_cap`, or a brute-force oracle over more than
    `oracle_cap` windows.

    The message always names the cap, so it can be raised from the
    command line with `--cap`.
    '''

    def __init__(self, cap, value, limit):
        self.cap = cap
        self.value = value
        self.limit = limit
        super().__init__(
            f"{cap} exceeded: needed {value}, limit is {limit}"
        )


class SpecError(AtomlabException):
    '''
    A ring description is invalid.
    '''


class SpecParseError(SpecError):
    '''
    A spec file could not be parsed. `line` is 1-based, or None when
    the problem is with the file as a whole (e.g. a missing key).
    '''

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ClosureViolation(SpecError):
    '''
    The subspaces do not satisfy V_i V_j in V_{i+j}. `pairs` lists every
    offending (i, j) with i <= j.
    '''

    def __init__(self, pairs):
        self.pairs = list(pairs)
        rendered = ", ".join(f"({i},{j})" for i, j in self.pairs)
        super().__init__(f"V_i V_j not contained in V_(i+j) for {rendered}")


class CrossTowerError(AtomlabException, ValueError):
    '''
    Operands belong to different field towers or different ring specs.
    '''


class NotInRing(AtomlabException, ValueError):
    '''
    A coefficient vector is not an element of the ring: some c_j lies
    outside V_j (with V_0 = K).
    '''


class ReportError(AtomlabException, ValueError):
    '''
    A machine report does not match `report_schema.json`. `path` is the
    location of the offending value inside the document.
    '''

    def __init__(self, message, path=()):
        self.path = list(path)
        if self.path:
            message = f"{message} (at {'/'.join(str(p) for p in self.path)})"
        super().__init__(message)


class InternalInconsistency(AtomlabException):
    '''
    Two independent computations of the same invariant disagree, or a
    search the theory guarantees to terminate did not. Either way this
    is a bug in atomlab, not in the input.

    Attributes:
        error -- what went wrong
        function -- where it was detected
        provenance -- values useful for reproducing it
    '''

    def __init__(self, error, function, provenance=None):
        self.error = error
        self.function = function
        self.provenance = provenance if provenance is not None else {}
        super().__init__(f"{function}: {error}")

    def to_dict(self):
        return {
            'error': self.error,
            'function': self.function,
            'error_provenance': self.provenance,
            'timestamp': datetime.datetime.utcnow().isoformat(),
            'traceback': ''.join(traceback.format_tb(self.__traceback__))
        }
