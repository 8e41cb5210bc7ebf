"""Metric profiles.

A profile is an ordered tuple of metric identifiers. The order is shared by
weight vectors, snapshot columns and every serialized document; the engine
itself is generic over the profile.
"""

# Default seven-metric profile: capture, usage, citation and social metrics.
DEFAULT_PROFILE = (
    "citeulike",
    "mendeley",
    "html_views",
    "pdf_downloads",
    "citations",
    "facebook",
    "twitter",
)
