//! Library surface of the command-line tool: the input formats and the
//! report schema, exposed for integration tests and for embedding.

pub mod formats;
