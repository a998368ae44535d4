"""Security requirements workbench: a gated ten-step workflow from system
goals through threat analysis and risk ranking to a validated specification
document."""

__version__ = "0.1.0"
