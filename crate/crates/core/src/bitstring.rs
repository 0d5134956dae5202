use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::BLOCK_BITS;

/// A sequence of bits packed MSB-first into bytes.
///
/// Bit `i` lives in block `i / 8` at position `i % 8`, where position 0 is the
/// most significant bit. The final block is zero-padded past `bit_len`, and
/// the block count is always exactly `ceil(bit_len / 8)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitString {
    bit_len: usize,
    blocks: Vec<u8>,
}

/// Eight consecutive bits of a [`BitString`], in their original order, as one
/// byte (the earliest bit is the most significant).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitWindow(pub u8);

#[inline]
pub(crate) fn blocks_for(bits: usize) -> usize {
    bits.div_ceil(BLOCK_BITS)
}

impl BitString {
    /// Parses a string of `0`/`1` characters. ASCII whitespace is ignored so
    /// blocks may be written space separated.
    pub fn from_bits(s: &str) -> Result<BitString> {
        let mut bits = Vec::with_capacity(s.len());
        for (position, c) in s.chars().enumerate() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                c if c.is_ascii_whitespace() => {}
                found => return Err(Error::InvalidSymbol { position, found }),
            }
        }
        Ok(BitString::from_bit_iter(bits))
    }

    /// Packs a sequence of booleans (`true` = 1).
    pub fn from_bit_iter<I: IntoIterator<Item = bool>>(bits: I) -> BitString {
        let mut blocks = Vec::new();
        let mut bit_len = 0;
        for bit in bits {
            if bit_len % BLOCK_BITS == 0 {
                blocks.push(0);
            }
            if bit {
                *blocks.last_mut().unwrap() |= 0x80 >> (bit_len % BLOCK_BITS);
            }
            bit_len += 1;
        }
        BitString { bit_len, blocks }
    }

    /// Takes ownership of raw bytes and keeps the first `bit_len` bits.
    ///
    /// Surplus whole bytes are dropped and the padding of the last kept byte
    /// is cleared.
    pub fn from_blocks(mut blocks: Vec<u8>, bit_len: usize) -> Result<BitString> {
        let available = blocks.len() * BLOCK_BITS;
        if bit_len > available {
            return Err(Error::BitLenTooLarge {
                requested: bit_len,
                available,
            });
        }
        blocks.truncate(blocks_for(bit_len));
        let tail = bit_len % BLOCK_BITS;
        if tail != 0 {
            *blocks.last_mut().unwrap() &= !(0xFFu8 >> tail);
        }
        Ok(BitString { bit_len, blocks })
    }

    /// Wraps whole bytes; the bit length is eight times the byte count.
    pub fn from_bytes(bytes: &[u8]) -> BitString {
        BitString {
            bit_len: bytes.len() * BLOCK_BITS,
            blocks: bytes.to_vec(),
        }
    }

    /// Number of bits.
    #[inline]
    pub fn bit_len(&self) -> usize {
        self.bit_len
    }

    /// Whether the string holds no bits.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bit_len == 0
    }

    /// The packed blocks, padding included.
    #[inline]
    pub fn blocks(&self) -> &[u8] {
        &self.blocks
    }

    /// Returns bit `i` as `0` or `1`.
    pub fn get_bit(&self, i: usize) -> Result<u8> {
        if i >= self.bit_len {
            return Err(Error::IndexOutOfRange {
                index: i,
                min: 0,
                len: self.bit_len,
            });
        }
        Ok(self.bit(i))
    }

    #[inline]
    pub(crate) fn bit(&self, i: usize) -> u8 {
        (self.blocks[i / BLOCK_BITS] >> (BLOCK_BITS - 1 - i % BLOCK_BITS)) & 1
    }

    /// Returns the eight bits ending at `end_bit` (inclusive), i.e. bits
    /// `end_bit - 7 ..= end_bit`.
    ///
    /// When `end_bit % 8 == 7` this is just the block containing it.
    pub fn extract_window(&self, end_bit: usize) -> Result<BitWindow> {
        if end_bit < BLOCK_BITS - 1 || end_bit >= self.bit_len {
            return Err(Error::IndexOutOfRange {
                index: end_bit,
                min: BLOCK_BITS - 1,
                len: self.bit_len,
            });
        }
        Ok(BitWindow(window_ending_at(&self.blocks, end_bit)))
    }

    /// Copies `len` bits starting at bit `start`.
    pub fn sub_bits(&self, start: usize, len: usize) -> Result<BitString> {
        let end = start.checked_add(len).filter(|&e| e <= self.bit_len);
        if end.is_none() {
            return Err(Error::IndexOutOfRange {
                index: start.saturating_add(len),
                min: 0,
                len: self.bit_len + 1,
            });
        }
        Ok(BitString::from_bit_iter(
            (start..start + len).map(|i| self.bit(i) == 1),
        ))
    }

    /// Iterates over the bits as `0`/`1` values.
    pub fn iter(&self) -> impl Iterator<Item = u8> + '_ {
        (0..self.bit_len).map(move |i| self.bit(i))
    }

    /// Renders the bits as a `0`/`1` string with no separators.
    pub fn to_bit_string(&self) -> String {
        self.iter()
            .map(|b| if b == 1 { '1' } else { '0' })
            .collect()
    }
}

/// Eight bits ending at `end_bit`. Reads one block when the window is block
/// aligned and two otherwise. The caller guarantees `end_bit >= 7`.
#[inline]
pub(crate) fn window_ending_at(blocks: &[u8], end_bit: usize) -> u8 {
    let j = end_bit / BLOCK_BITS;
    // bits of the window that fall in block j
    let low = end_bit % BLOCK_BITS + 1;
    if low == BLOCK_BITS {
        blocks[j]
    } else {
        (blocks[j - 1] << low) | (blocks[j] >> (BLOCK_BITS - low))
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString({}: {})", self.bit_len, self)
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Display for BitWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:08b}", self.0)
    }
}

impl core::str::FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<BitString> {
        BitString::from_bits(s)
    }
}
