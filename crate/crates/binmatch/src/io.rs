//! Raw binary files: the file's bytes are the blocks, verbatim. A bit length
//! shorter than the file can be supplied separately for payloads that do not
//! end on a byte boundary.

use std::fs;
use std::path::Path;

use binmatch_core::BitString;

use crate::{Error, Result};

/// Loads `path` as a bit string. Without `bit_len` every bit of the file is
/// used; with it, only the first `bit_len` bits are kept and the rest of the
/// last byte is cleared.
pub fn load_raw(path: impl AsRef<Path>, bit_len: Option<usize>) -> Result<BitString> {
    let path = path.as_ref();
    let bytes = fs::read(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let bit_len = bit_len.unwrap_or(bytes.len() * 8);
    Ok(BitString::from_blocks(bytes, bit_len)?)
}
