"""Settings and shared utilities."""
