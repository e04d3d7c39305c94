"""JSON formats and the command-line interface."""
