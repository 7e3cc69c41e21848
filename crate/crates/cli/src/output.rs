//! JSON serialization with deterministic 17-significant-digit floats, so
//! every f64 round-trips exactly and identical inputs produce byte-identical
//! output.

use serde::Serialize;
use std::io;

struct SciFloatFormatter;

impl serde_json::ser::Formatter for SciFloatFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        // 16 fraction digits = 17 significant digits, enough to round-trip
        // any finite f64.
        write!(writer, "{:.16e}", value)
    }

    fn write_f32<W>(&mut self, writer: &mut W, value: f32) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        write!(writer, "{:.8e}", value)
    }
}

/// Serializes to a compact JSON string with scientific-notation floats.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, SciFloatFormatter);
    value
        .serialize(&mut ser)
        .expect("output structures serialize without error");
    String::from_utf8(out).expect("serde_json emits UTF-8")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_round_trip_exactly() {
        for v in [0.6, 1.0 / 3.0, 1.25, -0.0, 2.0_f64.sqrt(), 1e-300] {
            let s = to_json(&v);
            let back: f64 = serde_json::from_str(&s).unwrap();
            assert_eq!(back.to_bits(), v.to_bits(), "{s}");
        }
    }

    #[test]
    fn integers_stay_plain() {
        assert_eq!(to_json(&42_u64), "42");
    }
}
