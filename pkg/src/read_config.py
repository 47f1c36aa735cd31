import os

import yaml


def parseconfig() -> object:
    """

    :return: object.

    A function parses the `config.yml` file.
    """
    current_dir = os.path.dirname(__file__)
    with open(f"{current_dir}/config.yml", "r") as config_file:
        data = yaml.load(config_file, Loader=yaml.FullLoader)
    return data


def apply_environment(parameters: dict) -> dict:
    """

    :param parameters: dict of model parameters read from the config file.
    :return: dict of the same parameters with environment overrides applied.

    A function lets `AMACI_NODE_BUDGET` and `AMACI_LOG_LEVEL` replace the configured defaults.
    """
    budget = os.environ.get("AMACI_NODE_BUDGET")
    if budget:
        parameters["node_budget"] = int(budget)
    level = os.environ.get("AMACI_LOG_LEVEL")
    if level:
        parameters["log_level"] = level.upper()
    return parameters


config_data = parseconfig()
model_parameters = apply_environment(config_data["model_parameters"])
model_input = config_data["model_input"]
