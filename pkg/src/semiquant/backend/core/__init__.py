"""Core configuration, constants, and logging for semiquant."""
