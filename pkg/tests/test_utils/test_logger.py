""" Tests for fracdelay.utils.fd_logger """

import json
import os
import unittest
from unittest.mock import patch

from fracdelay.utils import fd_logger


class TestLogger(unittest.TestCase):
    """Tests for fd_logger"""

    def setUp(self) -> None:
        self.logger = fd_logger.FracDelayLogger()
        self.initial_level = self.logger.level

    def tearDown(self) -> None:
        self.logger.set_level(self.initial_level)

    def test_singleton(self):
        """
        Tests that the logger is a singleton
        """
        self.assertIs(fd_logger.FracDelayLogger(), fd_logger.FracDelayLogger())

    def test_set_log_level(self):
        """
        Tests that the log level can be set by name or index
        """
        self.logger.set_level("TRACE")
        self.assertEqual(self.logger.level, "TRACE")

        self.logger.set_level("warn")
        self.assertEqual(self.logger.level, "WARN")

        self.logger.set_level(3)
        self.assertEqual(self.logger.level, "INFO")

    def test_invalid_log_level(self):
        """
        Tests that invalid levels raise ValueError
        """
        with self.assertRaises(ValueError):
            self.logger.set_level("LOUD")
        with self.assertRaises(ValueError):
            self.logger.set_level(9)

    def test_level_filter(self):
        """
        Tests that messages below the level are not printed
        """
        self.logger.set_level("WARN")
        with patch("builtins.print") as mock_print:
            self.logger.debug("hidden", "abm")
            mock_print.assert_not_called()

            self.logger.warn("shown", "abm")
            mock_print.assert_called_once()
            self.assertIn("abm | shown", mock_print.call_args[0][0])

    def test_enabled(self):
        """
        Tests the level comparison used to skip expensive messages
        """
        self.logger.set_level("DEBUG")
        self.assertTrue(self.logger.enabled("DEBUG"))
        self.assertTrue(self.logger.enabled("ERROR"))
        self.assertFalse(self.logger.enabled("TRACE"))

    def test_notset_disables(self):
        """
        Tests that NOTSET silences everything
        """
        self.logger.set_level("NOTSET")
        with patch("builtins.print") as mock_print:
            self.logger.error("nothing")
            mock_print.assert_not_called()

    def test_truncation(self):
        """
        Tests that oversized messages lose their middle
        """
        self.logger.set_level("INFO")
        with patch("builtins.print") as mock_print:
            self.logger.info("x" * (fd_logger.MAX_MESSAGE_LENGTH + 100))
            printed = mock_print.call_args[0][0]
            self.assertIn("...TRUNCATED 100 CHARACTERS...", printed)

    def test_json_format(self):
        """
        Tests structured output when FRACDELAY_LOG_FORMAT=json
        """
        self.logger.set_level("INFO")
        with patch.dict(os.environ, {"FRACDELAY_LOG_FORMAT": "json"}), \
                patch("builtins.print") as mock_print:
            self.logger.info("solved", "picard")
            record = json.loads(mock_print.call_args[0][0])
            self.assertEqual(record, {"context": "picard", "message": "solved", "level": "INFO"})
