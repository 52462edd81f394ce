import os

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

DOTENV = os.path.join(os.getcwd(), ".env")


class Settings(BaseSettings):
    # enumeration caps
    hypercube_cap: int = Field(default=24, ge=1)
    spectrum_cap: int = Field(default=20, ge=1)
    hadamard_cap: int = Field(default=16, ge=1)

    # evaluated (x, pattern) pairs per oracle call
    budget: int = Field(default=2**30, gt=0)

    workers: int = Field(default=1, ge=1)
    chunk_size: int = Field(default=256, ge=1)

    # network fault model
    shared_wire_faults: bool = False
    faulty_parity_gates: bool = False

    log_dir: str = "logs"
    log_level: str = "INFO"

    @property
    def log_file(self) -> str:
        return os.path.join(self.log_dir, "rcn_{time:YYYY_MM_DD}.log")

    model_config = SettingsConfigDict(env_file=DOTENV, env_prefix="RCN_")


settings = Settings()
