"""Services module for semiquant."""
