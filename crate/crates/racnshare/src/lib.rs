//! File formats, fixtures, DOT export and the `racnshare` command line on
//! top of [`racnshare_core`].

pub mod cli;
pub mod dot;
pub mod fixture;
pub mod formats;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed hex: {0}")]
    Hex(#[from] hex::FromHexError),
    #[error("{0}")]
    Invalid(String),
    #[error("cannot read {0}")]
    Io(String),
    #[error(transparent)]
    Core(#[from] racnshare_core::Error),
}
