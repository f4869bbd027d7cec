"""This package options includes option modules: prove options, check options, dump options, and basic options (used by every script)."""
