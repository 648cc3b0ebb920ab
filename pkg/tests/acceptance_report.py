"""Shared registry for the acceptance gate's one-line verdicts."""

lines: list[str] = []
