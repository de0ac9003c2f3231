pub mod csvio;
