use std::io::{BufRead, Write};

use num_complex::Complex64;

use super::{PlaneWaveComponent, SampleCloud};
use crate::error::{Error, Result};
use crate::minkowski::Vec3;

pub const CSV_HEADER: &str = "kx,ky,kz,mass,re_a,im_a,sigma,weight";

/// Reads a sample cloud. Line numbers in errors are 1-based and count the
/// header.
pub fn read_csv<R: BufRead>(reader: R) -> Result<SampleCloud> {
    let mut components = Vec::new();
    let mut saw_header = false;
    for (i, line) in reader.lines().enumerate() {
        let lineno = i + 1;
        let line = line.map_err(|e| Error::Csv {
            line: lineno,
            message: e.to_string(),
        })?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if !saw_header {
            let normalized: String = trimmed.split(',').map(str::trim).collect::<Vec<_>>().join(",");
            if normalized != CSV_HEADER {
                return Err(Error::Csv {
                    line: lineno,
                    message: format!("expected header `{CSV_HEADER}`"),
                });
            }
            saw_header = true;
            continue;
        }
        let fields: Vec<&str> = trimmed.split(',').map(str::trim).collect();
        if fields.len() != 8 {
            return Err(Error::Csv {
                line: lineno,
                message: format!("expected 8 columns, found {}", fields.len()),
            });
        }
        let mut v = [0.0f64; 8];
        for (slot, (name, text)) in v.iter_mut().zip(CSV_HEADER.split(',').zip(&fields)) {
            *slot = text.parse().map_err(|_| Error::Csv {
                line: lineno,
                message: format!("column {name}: cannot parse {text:?}"),
            })?;
        }
        let c = PlaneWaveComponent::new(
            Vec3::new(v[0], v[1], v[2]),
            v[3],
            Complex64::new(v[4], v[5]),
            v[6],
            v[7],
        )
        .map_err(|e| Error::Csv {
            line: lineno,
            message: e.to_string(),
        })?;
        components.push(c);
    }
    if !saw_header {
        return Err(Error::Csv {
            line: 1,
            message: "missing header".to_string(),
        });
    }
    if components.is_empty() {
        return Err(Error::EmptySpectrum);
    }
    Ok(SampleCloud { components })
}

/// Writes with shortest round-trip float formatting, so a read/write cycle
/// reproduces the input bytes.
pub fn write_csv<W: Write>(mut w: W, cloud: &SampleCloud) -> std::io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for c in &cloud.components {
        writeln!(
            w,
            "{},{},{},{},{},{},{},{}",
            c.k.x, c.k.y, c.k.z, c.mass, c.amplitude.re, c.amplitude.im, c.spin_label, c.weight
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::make_two_wave;

    #[test]
    fn round_trip_is_byte_identical() {
        let cloud = make_two_wave(0.8, 0.6, -1.0, 1.0).unwrap();
        let mut buf = Vec::new();
        write_csv(&mut buf, &cloud).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert_eq!(
            text,
            "kx,ky,kz,mass,re_a,im_a,sigma,weight\n0.6,0,0.8,0,1,0,-1,0.5\n-0.6,0,0.8,0,1,0,1,0.5\n"
        );
        let back = read_csv(buf.as_slice()).unwrap();
        assert_eq!(back, cloud);
    }

    #[test]
    fn malformed_row_reports_line() {
        let text = "kx,ky,kz,mass,re_a,im_a,sigma,weight\n0.6,0,0.8,0,1,0,-1,0.5\n0.6,0,abc,0,1,0,1,0.5\n";
        match read_csv(text.as_bytes()) {
            Err(Error::Csv { line, message }) => {
                assert_eq!(line, 3);
                assert!(message.contains("kz"));
            }
            other => panic!("unexpected {other:?}"),
        }
        let short = "kx,ky,kz,mass,re_a,im_a,sigma,weight\n1,2,3\n";
        assert!(matches!(read_csv(short.as_bytes()), Err(Error::Csv { line: 2, .. })));
        let negative_weight = "kx,ky,kz,mass,re_a,im_a,sigma,weight\n1,0,0,0,1,0,1,-1\n";
        assert!(matches!(
            read_csv(negative_weight.as_bytes()),
            Err(Error::Csv { line: 2, .. })
        ));
    }

    #[test]
    fn header_is_required() {
        assert!(matches!(
            read_csv("1,0,0,0,1,0,1,1\n".as_bytes()),
            Err(Error::Csv { line: 1, .. })
        ));
    }
}
