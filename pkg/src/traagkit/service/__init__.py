"""HTTP service wrapping the core package, plus the shared request handlers."""
