class CapExceededError(ValueError):
    """An enumeration was asked to run past its configured size cap."""
