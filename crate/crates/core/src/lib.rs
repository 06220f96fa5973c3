pub mod asymptotic;
pub mod config;
pub mod error;
pub mod hp;
pub mod modular;
pub mod partition;
pub mod verify;
