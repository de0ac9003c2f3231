//! CSV serialization for sweep records. The format is stable: fixed
//! header, `h` printed with 12 significant digits, flags as 0/1.

use bigraph_entropy::search::ExtremalRecord;
use bigraph_entropy::{Error, Result};
use std::io::{self, BufRead, Write};

pub const HEADER: &str = "n,m,y,q,x,r_low,r_high,h,is_max_h,is_min_r_low,is_min_r_high";

/// `h` with 12 significant digits in plain fixed-point notation.
pub fn format_h(h: f64) -> String {
    if h == 0.0 {
        return format!("{:.11}", 0.0);
    }
    let magnitude = h.abs().log10().floor() as i32;
    let precision = (11 - magnitude).max(0) as usize;
    format!("{h:.precision$}")
}

pub fn write_csv<W: Write>(out: &mut W, records: &[ExtremalRecord]) -> io::Result<()> {
    writeln!(out, "{HEADER}")?;
    for r in records {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{}",
            r.n,
            r.m,
            r.y,
            r.q,
            r.x,
            r.r_low,
            r.r_high,
            format_h(r.h),
            r.is_max_h as u8,
            r.is_min_r_low as u8,
            r.is_min_r_high as u8,
        )?;
    }
    Ok(())
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { position: line, message: message.into() }
}

pub fn parse_csv<R: BufRead>(input: R) -> Result<Vec<ExtremalRecord>> {
    let mut records = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line.map_err(|e| parse_err(i + 1, e.to_string()))?;
        if i == 0 {
            if line.trim() != HEADER {
                return Err(parse_err(1, format!("expected header {HEADER:?}")));
            }
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 11 {
            return Err(parse_err(i + 1, format!("expected 11 fields, got {}", fields.len())));
        }
        let int = |j: usize| -> Result<u64> {
            fields[j].parse().map_err(|_| parse_err(i + 1, format!("bad integer {:?}", fields[j])))
        };
        let flag = |j: usize| -> Result<bool> {
            match fields[j] {
                "0" => Ok(false),
                "1" => Ok(true),
                other => Err(parse_err(i + 1, format!("bad flag {other:?}"))),
            }
        };
        records.push(ExtremalRecord {
            n: int(0)?,
            m: int(1)?,
            y: int(2)?,
            q: int(3)?,
            x: int(4)?,
            r_low: int(5)?,
            r_high: int(6)?,
            h: fields[7]
                .parse()
                .map_err(|_| parse_err(i + 1, format!("bad h value {:?}", fields[7])))?,
            is_max_h: flag(8)?,
            is_min_r_low: flag(9)?,
            is_min_r_high: flag(10)?,
        });
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use bigraph_entropy::search::records_for;

    #[test]
    fn h_formatting() {
        assert_eq!(format_h(0.0), "0.00000000000");
        assert_eq!(format_h(66.70767433859537), "66.7076743386");
        assert_eq!(format_h(1.0986122886681098), "1.09861228867");
        assert_eq!(format_h(123456789012345.0), "123456789012345");
        assert_eq!(format_h(0.5), "0.500000000000");
    }

    #[test]
    fn round_trip() {
        let records = records_for(10, 22);
        let mut buf = Vec::new();
        write_csv(&mut buf, &records).unwrap();
        let parsed = parse_csv(&buf[..]).unwrap();
        assert_eq!(parsed.len(), records.len());
        for (a, b) in parsed.iter().zip(&records) {
            assert_eq!((a.n, a.m, a.y, a.q, a.x, a.r_low, a.r_high), (b.n, b.m, b.y, b.q, b.x, b.r_low, b.r_high));
            assert_eq!(
                (a.is_max_h, a.is_min_r_low, a.is_min_r_high),
                (b.is_max_h, b.is_min_r_low, b.is_min_r_high)
            );
            assert!((a.h - b.h).abs() <= 1e-9 * b.h.abs().max(1.0));
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_csv(&b"wrong,header"[..]).is_err());
        let bad_row = format!("{HEADER}\n1,2,3\n");
        assert!(parse_csv(bad_row.as_bytes()).is_err());
        let bad_flag = format!("{HEADER}\n2,1,1,1,1,0,0,0.00000000000,2,1,1\n");
        match parse_csv(bad_flag.as_bytes()) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }
}
