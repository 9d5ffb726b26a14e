//! Support library for the `qschur` binary: JSON document formats and the
//! verification-suite runner. Split out so integration tests (and other
//! tooling) can parse what the binary emits.

pub mod document;
pub mod verify;
