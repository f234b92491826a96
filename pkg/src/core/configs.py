from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

class Settings(BaseSettings):
    """
    Application settings loaded from environment variables or a .env file.

    Every value has a default; command-line flags override the run-level ones.
    """
    LOG_LEVEL: str = "INFO"

    APP_NAME: str = "Path Association Rule Miner"
    APP_DESC: str = "Mines path association rules from a single large property graph"
    APP_VERSION: str = "1.0.0"

    model_config = SettingsConfigDict(env_file=".env", env_prefix="PATH_RULES_", extra="ignore")

    # Run defaults
    DEFAULT_THREADS: int = Field(
        default=1,
        ge=1,
        description="Worker threads used when --threads is not given"
    )
    DEFAULT_SEED: int = Field(
        default=0,
        description="Seed for sampling and graph generation when --seed is not given"
    )
    DEFAULT_Z: float = Field(
        default=1.96,
        gt=0,
        description="z-value for sampling confidence intervals"
    )

    # Output settings
    REAL_SIGNIFICANT_DIGITS: int = Field(
        default=12,
        ge=1,
        le=17,
        description="Significant digits used when printing real-valued metrics"
    )

    # Oracle guard settings
    ORACLE_MAX_VERTICES: int = Field(
        default=200,
        description="Largest vertex count the brute-force oracle accepts"
    )
    ORACLE_MAX_ATTRIBUTES: int = Field(
        default=12,
        description="Largest attribute vocabulary the brute-force oracle accepts"
    )
    ORACLE_MAX_LENGTH: int = Field(
        default=3,
        description="Largest maximum path length the brute-force oracle accepts"
    )
    ORACLE_MAX_SET_SIZE: int = Field(
        default=4,
        description="Largest per-vertex attribute set the oracle enumerates subsets of"
    )

# Create a settings instance that can be imported by other modules
settings = Settings()
