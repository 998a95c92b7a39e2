//! Reference values of `m(n, d, k)` for `n = 3..6`, `d = 2..9`, `k = 1..9`,
//! stored verbatim from the previously published table; `None` marks cells
//! the source leaves blank. Used by `mtable --check-paper`.

/// Row layout: `(n, k, [m(n, 2, k), m(n, 3, k), ..., m(n, 9, k)])`.
pub const GOLDEN_D_RANGE: std::ops::RangeInclusive<u32> = 2..=9;

type Row = (usize, usize, [Option<u32>; 8]);

const fn full(values: [u32; 8]) -> [Option<u32>; 8] {
    [
        Some(values[0]),
        Some(values[1]),
        Some(values[2]),
        Some(values[3]),
        Some(values[4]),
        Some(values[5]),
        Some(values[6]),
        Some(values[7]),
    ]
}

/// Blank at `d = 2`, values for `d = 3..9`.
const fn tail7(values: [u32; 7]) -> [Option<u32>; 8] {
    [
        None,
        Some(values[0]),
        Some(values[1]),
        Some(values[2]),
        Some(values[3]),
        Some(values[4]),
        Some(values[5]),
        Some(values[6]),
    ]
}

pub static GOLDEN: &[Row] = &[
    // n = 3 block, published rows k = 1..9.
    (3, 1, full([3, 3, 3, 3, 3, 3, 3, 3])),
    (3, 2, full([6, 6, 6, 6, 6, 6, 6, 6])),
    (3, 3, full([10, 10, 10, 10, 10, 10, 10, 10])),
    (3, 4, full([12, 13, 13, 13, 13, 13, 13, 13])),
    (3, 5, full([14, 16, 17, 16, 16, 16, 16, 16])),
    (3, 6, tail7([21, 21, 21, 21, 21, 21, 21])),
    (3, 7, tail7([23, 24, 24, 25, 24, 24, 24])),
    (3, 8, tail7([25, 27, 27, 28, 29, 27, 27])),
    (3, 9, tail7([27, 30, 31, 31, 32, 33, 31])),
    // n = 4 block.
    (4, 1, full([4, 4, 4, 4, 4, 4, 4, 4])),
    (4, 2, full([8, 8, 8, 8, 8, 8, 8, 8])),
    (4, 3, full([13, 13, 13, 13, 13, 13, 13, 13])),
    (4, 4, full([20, 20, 20, 20, 20, 20, 20, 20])),
    (4, 5, full([23, 24, 25, 24, 24, 24, 24, 24])),
    (4, 6, full([26, 29, 29, 31, 28, 28, 28, 28])),
    (4, 7, full([30, 35, 35, 35, 37, 35, 35, 35])),
    (4, 8, full([32, 39, 40, 41, 41, 43, 40, 40])),
    (4, 9, full([34, 45, 45, 45, 47, 47, 49, 45])),
    // n = 5 block.
    (5, 1, full([5, 5, 5, 5, 5, 5, 5, 5])),
    (5, 2, full([10, 10, 10, 10, 10, 10, 10, 10])),
    (5, 3, full([17, 16, 16, 16, 16, 16, 16, 16])),
    (5, 4, full([24, 25, 24, 24, 24, 24, 24, 24])),
    (5, 5, full([35, 35, 35, 35, 35, 35, 35, 35])),
    (5, 6, full([39, 40, 40, 41, 40, 40, 40, 40])),
    (5, 7, full([43, 47, 45, 46, 49, 45, 45, 45])),
    (5, 8, full([48, 54, 55, 54, 54, 57, 54, 54])),
    (5, 9, full([55, 60, 60, 63, 61, 62, 65, 59])),
    // n = 6 block.
    (6, 1, full([6, 6, 6, 6, 6, 6, 6, 6])),
    (6, 2, full([12, 12, 12, 12, 12, 12, 12, 12])),
    (6, 3, full([21, 19, 19, 19, 19, 19, 19, 19])),
    (6, 4, full([28, 31, 28, 28, 28, 28, 28, 28])),
    (6, 5, full([40, 40, 41, 40, 40, 40, 40, 40])),
    (6, 6, full([56, 56, 56, 56, 56, 56, 56, 56])),
    (6, 7, full([61, 62, 62, 62, 62, 62, 62, 62])),
    (6, 8, full([66, 71, 68, 68, 68, 71, 68, 68])),
    (6, 9, full([73, 79, 81, 79, 79, 79, 81, 79])),
];

/// The reference value for a cell, when the published table carries one.
pub fn golden_value(n: usize, d: u32, k: usize) -> Option<u32> {
    if !GOLDEN_D_RANGE.contains(&d) {
        return None;
    }
    GOLDEN
        .iter()
        .find(|&&(gn, gk, _)| gn == n && gk == k)
        .and_then(|&(_, _, row)| row[(d - 2) as usize])
}
