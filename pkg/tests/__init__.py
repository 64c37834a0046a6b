# Test module for lambdalin
