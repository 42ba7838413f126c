pub mod alphabet;
pub mod analysis;
pub mod automata;
pub mod classical;
pub mod error;
pub mod normalize;
pub mod oracle;
pub mod parse;
pub mod refined;
pub mod regexp;
pub mod reordering;
pub mod cli;
