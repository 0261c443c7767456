//! Symbol codecs for file input and output.
//!
//! Symbols mode reads whitespace-separated decimal symbols and writes the
//! canonical form: single spaces, one trailing newline, nothing for the
//! empty message. Bytes mode is the identity byte ↔ symbol map and is only
//! meaningful for keys with q = 256.

use algebra_core::Symbol;
use anyhow::{bail, Context, Result};

/// Parses whitespace-separated decimal symbols, each required to be < q.
pub fn parse_symbols(text: &str, order: usize) -> Result<Vec<Symbol>> {
    let mut symbols = Vec::new();
    for (index, token) in text.split_whitespace().enumerate() {
        let value: u64 = token
            .parse()
            .with_context(|| format!("symbol {index}: invalid integer {token:?}"))?;
        if value >= order as u64 {
            bail!("symbol {value} at offset {index} out of range (q = {order})");
        }
        symbols.push(value as Symbol);
    }
    Ok(symbols)
}

/// Canonical symbols-mode text.
pub fn render_symbols(symbols: &[Symbol]) -> String {
    if symbols.is_empty() {
        return String::new();
    }
    let mut out = String::with_capacity(symbols.len() * 2 + 1);
    for (index, symbol) in symbols.iter().enumerate() {
        if index > 0 {
            out.push(' ');
        }
        out.push_str(&symbol.to_string());
    }
    out.push('\n');
    out
}

pub fn bytes_to_symbols(bytes: &[u8]) -> Vec<Symbol> {
    bytes.iter().map(|&b| b as Symbol).collect()
}

/// Caller guarantees the symbols came from a q = 256 alphabet.
pub fn symbols_to_bytes(symbols: &[Symbol]) -> Vec<u8> {
    symbols.iter().map(|&s| s as u8).collect()
}
