//! Support code for the `sdepth` command: the result cache and cached
//! computations.

pub mod cache;
pub mod compute;

use sdepth_core::replay::Verdict;

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INCONCLUSIVE: u8 = 3;

/// 0 when everything passed, 1 on any failure, 3 when the only non-passing
/// verdicts are inconclusive.
pub fn exit_code(verdicts: impl IntoIterator<Item = Verdict>) -> u8 {
    let mut code = EXIT_PASS;
    for v in verdicts {
        match v {
            Verdict::Fail => return EXIT_FAIL,
            Verdict::Inconclusive => code = EXIT_INCONCLUSIVE,
            Verdict::Pass => {}
        }
    }
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        use Verdict::*;
        assert_eq!(exit_code([]), 0);
        assert_eq!(exit_code([Pass, Pass]), 0);
        assert_eq!(exit_code([Pass, Inconclusive]), 3);
        assert_eq!(exit_code([Inconclusive, Fail, Pass]), 1);
    }
}
