//! Deterministic text output: 17 significant digits, sorted JSON keys,
//! `\n` line endings.

use std::io;

use serde::Serialize;
use serde_json::ser::{Formatter, PrettyFormatter};

/// Formats like C's `%.17g`: round-trip exact, trailing zeros trimmed,
/// scientific notation outside `1e-5 ≤ |v| < 1e17`.
pub fn fmt17(v: f64) -> String {
    if v.is_nan() {
        return "NaN".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if v == 0.0 {
        return if v.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let sci = format!("{:.16e}", v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..17).contains(&exp) {
        let m = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        return format!("{m}e{sign}{:02}", exp.abs());
    }
    let decimals = (16 - exp).max(0) as usize;
    trim_zeros(&format!("{:.*}", decimals, v)).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Pretty printer that writes floats with [`fmt17`].
struct Fmt17Formatter<'a>(PrettyFormatter<'a>);

macro_rules! delegate {
    ($($name:ident $(($arg:ident: $ty:ty))?;)*) => {
        $(
            fn $name<W: ?Sized + io::Write>(&mut self, w: &mut W $(, $arg: $ty)?) -> io::Result<()> {
                self.0.$name(w $(, $arg)?)
            }
        )*
    };
}

impl Formatter for Fmt17Formatter<'_> {
    delegate! {
        begin_array;
        end_array;
        begin_array_value(first: bool);
        end_array_value;
        begin_object;
        end_object;
        begin_object_key(first: bool);
        begin_object_value;
        end_object_value;
    }

    fn write_f64<W: ?Sized + io::Write>(&mut self, w: &mut W, v: f64) -> io::Result<()> {
        // non-finite values never reach here: serde_json maps them to null
        w.write_all(fmt17(v).as_bytes())
    }
}

/// Pretty JSON with keys sorted and a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    // Value's map is a BTreeMap, which sorts keys
    let value = serde_json::to_value(value).expect("serializable");
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(
        &mut buf,
        Fmt17Formatter(PrettyFormatter::with_indent(b"  ")),
    );
    value.serialize(&mut ser).expect("write to memory");
    buf.push(b'\n');
    String::from_utf8(buf).expect("utf-8")
}

/// CSV with a header row; fields are numbers or plain identifiers.
pub fn to_csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}
