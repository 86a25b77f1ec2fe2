//! Stable 64-bit content hashing (FNV-1a), used for schema fingerprints in
//! model files and for deterministic, content-addressed fold assignment.
//!
//! The function is fixed forever: changing it would silently invalidate
//! every saved model header and reshuffle every cross-validation split.

const OFFSET_BASIS: u64 = 0xcbf2_9ce4_8422_2325;
const PRIME: u64 = 0x0000_0100_0000_01b3;

/// FNV-1a over a byte slice.
pub fn fnv1a_64(bytes: &[u8]) -> u64 {
    extend(OFFSET_BASIS, bytes)
}

/// Continue an FNV-1a hash with more bytes (compose with [`fnv1a_64`]).
pub fn extend(state: u64, bytes: &[u8]) -> u64 {
    let mut hash = state;
    for &byte in bytes {
        hash ^= u64::from(byte);
        hash = hash.wrapping_mul(PRIME);
    }
    hash
}

/// Sixteen lowercase hex digits of the hash.
pub fn to_hex(hash: u64) -> String {
    format!("{hash:016x}")
}
