"""Resource-bound exceptions shared across the engine.

These signal that a configured cap was hit, not that the input was
invalid; callers that want partial results should catch the base class.
"""


class ResourceLimitExceeded(Exception):
    """A configured resource bound was exceeded."""


class DegreeCapExceeded(ResourceLimitExceeded):
    """A Buchberger run produced an element past the degree cap."""


class GeneratorLimitExceeded(ResourceLimitExceeded):
    """An operation received more generators than its configured bound."""


class LatticeLimitExceeded(ResourceLimitExceeded):
    """An lcm-lattice closure grew past its configured bound."""
