"""Exception hierarchy shared by all torictop modules."""


class InputError(ValueError):
    """Invalid user-supplied data: bad vertex indices, malformed JSON,
    dimension mismatches, failed polytope checks.  CLI exit code 2."""


class CapExceededError(InputError):
    """A subset enumeration would exceed the configured size cap."""


class ConsistencyError(RuntimeError):
    """An identity that is a theorem failed to hold.  This means a bug in
    this library or inconsistent input that slipped through validation,
    never a property of honest data.  CLI exit code 3."""
