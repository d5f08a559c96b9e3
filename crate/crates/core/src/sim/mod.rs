//! Configuration-driven simulation front end (placeholder while building).
