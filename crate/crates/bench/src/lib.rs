//! Placeholder library target; all content lives in the bench targets.
