//! Aligned text tables for human eyes. Only the JSON output is
//! contract-stable; this layout may change freely.

/// Two-column key/value listing, keys padded to a common width.
pub fn key_values(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        out.push_str(&format!("{k:<width$}  {v}\n"));
    }
    out
}

/// Header plus rows, every column padded to its widest cell.
pub fn columns(header: &[&str], rows: &[Vec<String>]) -> String {
    let ncols = header.len();
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate().take(ncols) {
            widths[i] = widths[i].max(cell.len());
        }
    }
    // the last column is left unpadded so lines carry no trailing blanks
    let mut out = String::new();
    for (i, h) in header.iter().enumerate() {
        if i > 0 {
            out.push_str("  ");
        }
        if i + 1 == ncols {
            out.push_str(h);
        } else {
            out.push_str(&format!("{h:<width$}", width = widths[i]));
        }
    }
    out.push('\n');
    for row in rows {
        for (i, cell) in row.iter().enumerate().take(ncols) {
            if i > 0 {
                out.push_str("  ");
            }
            if i + 1 == ncols {
                out.push_str(cell);
            } else {
                out.push_str(&format!("{cell:<width$}", width = widths[i]));
            }
        }
        out.push('\n');
    }
    out
}
