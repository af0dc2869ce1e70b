pub mod error;
pub mod fsutil;
pub mod imgcore;
pub mod shapefeat;
