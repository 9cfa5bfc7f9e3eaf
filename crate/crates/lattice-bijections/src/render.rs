//! ASCII drawings of paths.
//!
//! Up/down paths are drawn one column per step, `/` and `\` in the band of
//! heights the step crosses, with the axis shown as `_` along height 0.
//! North/east paths use a doubled grid with `_` for East and `|` for North.
//! Diagonal points the path does not draw over show as `.`.

use std::fmt::Write;

use lattice_bijections_core::path::{GridPoint, NEPath, StepNE, StepUD, UDPath};
use lattice_bijections_core::trace::{Stage, TraceEvent};
use lattice_bijections_core::warmup::{AnkPath, MarkedTiePath};
use lattice_bijections_core::{MarkedPath, PathTriple};

struct Canvas {
    cells: Vec<Vec<char>>,
}

impl Canvas {
    fn new(rows: usize, cols: usize) -> Self {
        Canvas {
            cells: vec![vec![' '; cols]; rows],
        }
    }

    fn put(&mut self, row: usize, col: usize, c: char) {
        self.cells[row][col] = c;
    }

    fn fill_blank(&mut self, row: usize, col: usize, c: char) {
        if self.cells[row][col] == ' ' {
            self.cells[row][col] = c;
        }
    }

    fn lines(&self) -> impl Iterator<Item = String> + '_ {
        self.cells
            .iter()
            .map(|r| r.iter().collect::<String>().trim_end().to_owned())
    }
}

/// Draws the concatenation of `parts`, separated by a column of `:`.
fn draw_ud(parts: &[&UDPath], mark: Option<usize>) -> String {
    let mut steps: Vec<Option<StepUD>> = Vec::new();
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            steps.push(None);
        }
        steps.extend(p.steps().iter().copied().map(Some));
    }
    let mut h = 0i64;
    let mut low = 0i64;
    let mut high = 0i64;
    for s in steps.iter().flatten() {
        h += s.delta();
        low = low.min(h);
        high = high.max(h);
    }
    // band b holds steps between heights b and b + 1; band 0 is always drawn
    let top = (high - 1).max(0);
    let rows = (top - low + 1) as usize;
    let row_of = |band: i64| (top - band) as usize;
    let mut canvas = Canvas::new(rows, steps.len().max(1));
    h = 0;
    for (col, s) in steps.iter().enumerate() {
        match s {
            Some(StepUD::Up) => {
                canvas.put(row_of(h), col, '/');
                h += 1;
            }
            Some(StepUD::Down) => {
                h -= 1;
                canvas.put(row_of(h), col, '\\');
            }
            None => (0..rows).for_each(|r| canvas.put(r, col, ':')),
        }
    }
    for col in 0..steps.len() {
        canvas.fill_blank(row_of(0), col, '_');
    }
    let width = top.to_string().len().max(low.to_string().len());
    let mut out = String::new();
    for (i, line) in canvas.lines().enumerate() {
        let band = top - i as i64;
        writeln!(out, "{band:>width$} |{line}").unwrap();
    }
    if let Some(x) = mark {
        writeln!(out, "{:>width$} |{}^ x={x}", "", " ".repeat(x)).unwrap();
    }
    out
}

pub fn render_ud(p: &UDPath) -> String {
    draw_ud(&[p], None)
}

pub fn render_triple(t: &PathTriple) -> String {
    draw_ud(&[t.a(), t.b(), t.c()], None)
}

pub fn render_marked(m: &MarkedPath) -> String {
    let mut out = draw_ud(&[m.path()], Some(m.mark()));
    out.pop();
    writeln!(out, " height={}", m.mark_height()).unwrap();
    out
}

fn draw_ne(paths: &[&NEPath], mark: Option<usize>) -> String {
    let pts: Vec<_> = paths.iter().flat_map(|p| p.points()).collect();
    let min_x = pts.iter().map(|q| q.x).min().unwrap_or(0).min(0);
    let min_y = pts.iter().map(|q| q.y).min().unwrap_or(0).min(0);
    let max_x = pts.iter().map(|q| q.x).max().unwrap_or(0).max(0);
    let max_y = pts.iter().map(|q| q.y).max().unwrap_or(0).max(0);
    let rows = (max_y - min_y + 1) as usize;
    let cols = (2 * (max_x - min_x) + 1) as usize;
    let row_of = |y: i64| (max_y - y) as usize;
    let col_of = |x: i64| (2 * (x - min_x)) as usize;
    let mut canvas = Canvas::new(rows, cols);
    for p in paths {
        let mut q = p.start();
        for s in p.steps() {
            q = match s {
                StepNE::East => {
                    canvas.put(row_of(q.y), col_of(q.x) + 1, '_');
                    q.offset(GridPoint::new(1, 0))
                }
                StepNE::North => {
                    canvas.put(row_of(q.y), col_of(q.x), '|');
                    q.offset(GridPoint::new(0, 1))
                }
            };
        }
    }
    for d in min_x.max(min_y)..=max_x.min(max_y) {
        canvas.fill_blank(row_of(d), col_of(d), '.');
    }
    let width = max_y.to_string().len().max(min_y.to_string().len());
    let mut out = String::new();
    for (i, line) in canvas.lines().enumerate() {
        writeln!(out, "{:>width$} |{line}", max_y - i as i64).unwrap();
    }
    if let (Some(i), [p, ..]) = (mark, paths) {
        let q = p.point_at(i);
        writeln!(out, "{:>width$} |{}^ mark {i} at {q}", "", " ".repeat(col_of(q.x))).unwrap();
    }
    out
}

pub fn render_ne(p: &NEPath) -> String {
    draw_ne(&[p], None)
}

pub fn render_marked_tie(m: &MarkedTiePath) -> String {
    draw_ne(&[m.path().path()], Some(m.mark()))
}

/// Draws the serialized form of any intermediate value of a trace, or `None`
/// when the text is a label rather than a path.
pub fn render_text(s: &str) -> Option<String> {
    if let Ok(p) = s.parse::<AnkPath>() {
        return Some(render_ne(p.path()));
    }
    if let Ok(m) = s.parse::<MarkedTiePath>() {
        return Some(render_marked_tie(&m));
    }
    if let Ok(m) = s.parse::<MarkedPath>() {
        return Some(render_marked(&m));
    }
    if let Ok(t) = s.parse::<PathTriple>() {
        return Some(render_triple(&t));
    }
    if let Some((a, b)) = s.split_once('|') {
        if let (Ok(a), Ok(b)) = (NEPath::parse(a), NEPath::parse(b)) {
            return Some(draw_ne(&[&a, &b], None));
        }
        if let (Ok(a), Ok(b)) = (UDPath::parse(a), UDPath::parse(b)) {
            return Some(draw_ud(&[&a, &b], None));
        }
    }
    if let Ok(p) = NEPath::parse(s) {
        if !p.is_empty() {
            return Some(render_ne(&p));
        }
    }
    match UDPath::parse(s) {
        Ok(p) if !p.is_empty() => Some(render_ud(&p)),
        _ => None,
    }
}

/// Draws the value a trace event produced. Stages whose result is a label
/// draw nothing.
pub fn render_event(e: &TraceEvent) -> Option<String> {
    match e.stage {
        Stage::Classify | Stage::Dispatch | Stage::IsInI => None,
        _ => render_text(&e.after),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_marked() {
        let m: MarkedPath = "UDDU@3".parse().unwrap();
        assert_eq!(
            render_marked(&m),
            concat!(" 0 |/\\__\n", "-1 |  \\/\n", "   |   ^ x=3 height=-1\n"),
        );
    }

    #[test]
    fn golden_triple() {
        let t: PathTriple = "UD|UUDD|DU".parse().unwrap();
        assert_eq!(
            render_triple(&t),
            concat!(" 1 |  : /\\ :\n", " 0 |/\\:/__\\:__\n", "-1 |  :    :\\/\n"),
        );
    }

    #[test]
    fn golden_ne() {
        let p = NEPath::parse("(0,0):EENNNNEE").unwrap();
        assert_eq!(
            render_ne(&p),
            concat!(
                "4 |     _ _.\n",
                "3 |    | .\n",
                "2 |    |\n",
                "1 |  . |\n",
                "0 |._ _|\n",
            ),
        );
    }

    #[test]
    fn golden_marked_tie() {
        let m: MarkedTiePath = "(0,0):ENEN#2".parse().unwrap();
        assert_eq!(
            render_marked_tie(&m),
            concat!("2 |    .\n", "1 |  ._|\n", "0 |._|\n", "  |  ^ mark 2 at (1,1)\n"),
        );
    }

    #[test]
    fn labels_are_not_drawn() {
        assert_eq!(render_text("J-below"), None);
        assert_eq!(render_text(""), None);
        assert!(render_text("n=4,k=5 (1,0):NEENNEE").is_some());
        assert!(render_text("(0,0):EEN|(2,1):NN").is_some());
        assert_eq!(render_text("DUU|D").unwrap(), concat!(" 0 |__/:\\\n", "-1 |\\/ :\n"));
    }
}
