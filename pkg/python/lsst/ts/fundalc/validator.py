# This file is part of ts_fundalc.
#
# Developed for the Vera Rubin Observatory Telescope and Site Systems.
# This product includes software developed by the LSST Project
# (https://www.lsst.org).
# See the COPYRIGHT file at the top-level directory of this distribution
# for details of code ownership.
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

__all__ = ["DefaultingValidator"]

import copy

import jsonschema


def _extend_with_default(validator_class):
    validate_properties = validator_class.VALIDATORS["properties"]

    def set_defaults(validator, properties, instance, schema):
        if isinstance(instance, dict):
            for name, subschema in properties.items():
                if "default" in subschema:
                    instance.setdefault(name, copy.deepcopy(subschema["default"]))
        yield from validate_properties(validator, properties, instance, schema)

    return jsonschema.validators.extend(validator_class, {"properties": set_defaults})


class DefaultingValidator:
    """Validate configuration data against a JSON schema, filling in
    defaults.

    Parameters
    ----------
    schema : `dict`
        JSON schema, checked when the validator is built.

    Raises
    ------
    jsonschema.SchemaError
        If ``schema`` is not a valid schema.
    """

    def __init__(self, schema):
        validator_class = jsonschema.validators.validator_for(schema)
        validator_class.check_schema(schema)
        self.schema = schema
        self.defaults_validator = _extend_with_default(validator_class)(schema)

    def validate(self, data):
        """Return a validated copy of ``data`` with defaults filled in.

        Parameters
        ----------
        data : `dict` or `None`
            Data to validate; `None` is treated as an empty dict.

        Returns
        -------
        result : `dict`

        Raises
        ------
        jsonschema.ValidationError
            If ``data`` does not match the schema.
        """
        result = {} if data is None else copy.deepcopy(data)
        self.defaults_validator.validate(result)
        return result
