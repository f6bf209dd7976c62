pub mod ff;
pub mod perm;
pub mod cyclo;
pub mod chartab;
pub mod ctformat;
pub mod hypc;
pub mod modfp;
pub mod bounds;
pub mod catalog;
pub mod cli;
